#include "akl/geometry.hpp"

#include "akl/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace akl {

ChartedStructure::ChartedStructure(std::string name, int n, MatrixProvider kappa,
                                   MatrixProvider j, std::vector<Interval> domain,
                                   bool symplectic)
    : name_(std::move(name)), n_(n), kappa_(std::move(kappa)), j_(std::move(j)),
      domain_(std::move(domain)), symplectic_(symplectic) {
  if (n_ <= 0) throw Error(ErrorKind::MalformedDescriptor, "complex dimension must be positive");
  if (domain_.size() != dim())
    throw Error(ErrorKind::MalformedDescriptor, "domain box needs one interval per coordinate");
  for (const auto& iv : domain_)
    if (!(iv.lo <= iv.hi)) throw Error(ErrorKind::MalformedDescriptor, "empty domain interval");
  if (!kappa_ || !j_) throw Error(ErrorKind::MalformedDescriptor, "missing provider");
}

bool ChartedStructure::contains(const Point& x) const noexcept {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] >= domain_[i].lo && x[i] <= domain_[i].hi)) return false;
  return true;
}

void ChartedStructure::require_in_domain(const Point& x) const {
  if (contains(x)) return;
  std::ostringstream os;
  os << "point (";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ") outside the domain of chart " << name_;
  throw Error(ErrorKind::DomainViolation, os.str());
}

JetMatrix ChartedStructure::checked(const MatrixProvider& provider, const Point& x,
                                    const char* what) const {
  require_in_domain(x);
  JetMatrix m = provider(x);
  if (m.rows() != dim() || m.cols() != dim() || m.nvars() != dim())
    throw Error(ErrorKind::ShapeMismatch, std::string(what) + " provider returned wrong shape");
  if (m.min_order() < Jet2::kMaxOrder)
    throw Error(ErrorKind::InvalidOrder, std::string(what) + " provider must return order-2 jets");
  return m;
}

JetMatrix ChartedStructure::kappa(const Point& x) const { return checked(kappa_, x, "kappa"); }
JetMatrix ChartedStructure::j(const Point& x) const { return checked(j_, x, "J"); }

MetricData metric_from_calibration(const JetMatrix& kappa, const JetMatrix& j) {
  MetricData m;
  m.g = j.transpose() * kappa;
  const Eigen::MatrixXd sym = 0.5 * (m.g.value() + m.g.value().transpose()).real();
  Eigen::LLT<Eigen::MatrixXd> llt(sym);
  if (llt.info() != Eigen::Success)
    throw Error(ErrorKind::NotPositiveDefinite, "kappa(J., .) is not positive definite");
  m.g_inv = inverse(m.g);
  return m;
}

MetricData metric_from_calibration(const ChartedStructure& chart, const Point& x) {
  return metric_from_calibration(chart.kappa(x), chart.j(x));
}

ConnectionData christoffel(const MetricData& metric) {
  const std::size_t dim = metric.g.rows();
  const std::size_t nv = metric.g.nvars();
  std::vector<JetMatrix> dg;
  dg.reserve(dim);
  for (std::size_t a = 0; a < dim; ++a) dg.push_back(metric.g.derivative(a));

  ConnectionData conn{dim, std::vector<Jet2>(dim * dim * dim, Jet2(nv))};
  // lowered[d] = d_a g_bd + d_b g_ad - d_d g_ab, for fixed (a, b)
  std::vector<Jet2> lowered(dim, Jet2(nv));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a; b < dim; ++b) {
      for (std::size_t d = 0; d < dim; ++d) lowered[d] = dg[a](b, d) + dg[b](a, d) - dg[d](a, b);
      for (std::size_t c = 0; c < dim; ++c) {
        Jet2 acc(nv);
        for (std::size_t d = 0; d < dim; ++d) acc += metric.g_inv(c, d) * lowered[d];
        acc *= 0.5;
        conn.gamma[(c * dim + a) * dim + b] = acc;
        conn.gamma[(c * dim + b) * dim + a] = std::move(acc);
      }
    }
  return conn;
}

ConnectionData christoffel(const ChartedStructure& chart, const Point& x) {
  return christoffel(metric_from_calibration(chart, x));
}

JetMatrix calibrated_j(const JetMatrix& kappa, const JetMatrix& h) {
  const JetMatrix s = sqrt_pd(h);
  const JetMatrix s_inv = inverse(s);
  const JetMatrix a_sym = -1.0 * (s_inv * kappa * s_inv);
  const JetMatrix root = sqrt_pd(a_sym.transpose() * a_sym);
  return -1.0 * (s_inv * a_sym * inverse(root) * s);
}

MatrixProvider calibrated_j_from_metric(MatrixProvider kappa, MatrixProvider h) {
  return [kappa = std::move(kappa), h = std::move(h)](const Point& x) {
    return calibrated_j(kappa(x), h(x));
  };
}

Eigen::MatrixXcd standard_j(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(2 * i + 1, 2 * i) = 1.0;
    j(2 * i, 2 * i + 1) = -1.0;
  }
  return j;
}

Eigen::MatrixXcd standard_kappa(int n) {
  Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    k(2 * i + 1, 2 * i) = 1.0;
    k(2 * i, 2 * i + 1) = -1.0;
  }
  return k;
}

LocalGeometry::LocalGeometry(const ChartedStructure& chart, const Point& x)
    : dim_(chart.dim()), x_(x), kappa_(chart.kappa(x)), j_(chart.j(x)),
      metric_(metric_from_calibration(kappa_, j_)), connection_(christoffel(metric_)) {}

JetVec LocalGeometry::project_10(const JetVec& v) const {
  return 0.5 * (v - Complex(0.0, 1.0) * apply_j(v));
}

JetVec LocalGeometry::project_01(const JetVec& v) const {
  return 0.5 * (v + Complex(0.0, 1.0) * apply_j(v));
}

CVec LocalGeometry::project_10(const CVec& v) const {
  return 0.5 * (v - Complex(0.0, 1.0) * (j_.value() * v));
}

CVec LocalGeometry::project_01(const CVec& v) const {
  return 0.5 * (v + Complex(0.0, 1.0) * (j_.value() * v));
}

Jet2 LocalGeometry::pairing(const JetVec& u, const JetVec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw Error(ErrorKind::ShapeMismatch, "pairing");
  Jet2 acc(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    Jet2 row(dim_);
    for (std::size_t b = 0; b < dim_; ++b) row += metric_.g(a, b) * v[b];
    acc += u[a] * row;
  }
  return acc;
}

Complex LocalGeometry::pairing(const CVec& u, const CVec& v) const {
  return (u.transpose() * g().value() * v)(0, 0);
}

JetVec directional_derivative(const JetVec& u, const JetVec& v) {
  const std::size_t dim = u.size();
  JetVec r;
  r.reserve(v.size());
  for (const auto& comp : v) {
    Jet2 acc(comp.nvars());
    for (std::size_t a = 0; a < dim; ++a) acc += u[a] * comp.derivative(a);
    r.push_back(std::move(acc));
  }
  return r;
}

Jet2 directional_derivative(const JetVec& u, const Jet2& f) {
  Jet2 acc(f.nvars());
  for (std::size_t a = 0; a < u.size(); ++a) acc += u[a] * f.derivative(a);
  return acc;
}

JetVec bracket(const JetVec& u, const JetVec& v) {
  return directional_derivative(u, v) - directional_derivative(v, u);
}

JetVec covariant_derivative(const LocalGeometry& geo, const JetVec& u, const JetVec& v) {
  const std::size_t dim = geo.dim();
  if (u.size() != dim || v.size() != dim)
    throw Error(ErrorKind::ShapeMismatch, "covariant derivative operands");
  JetVec r = directional_derivative(u, v);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t a = 0; a < dim; ++a) {
      Jet2 inner(dim);
      for (std::size_t b = 0; b < dim; ++b) inner += geo.gamma(c, a, b) * v[b];
      r[c] += u[a] * inner;
    }
  return r;
}

CVec covariant_derivative_vec(const ChartedStructure& chart, const Point& x, const CVec& direction,
                              const PolyVectorField& field) {
  const LocalGeometry geo(chart, x);
  return values(covariant_derivative(geo, geo.constant(direction), field.germ(x)));
}

CVec curvature(const LocalGeometry& geo, const CVec& x, const CVec& y, const CVec& z) {
  const std::size_t dim = geo.dim();
  CVec out = CVec::Zero(dim);
  for (std::size_t d = 0; d < dim; ++d)
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        const Complex xy = x(a) * y(b);
        if (xy == Complex{}) continue;
        for (std::size_t c = 0; c < dim; ++c) {
          Complex r = geo.gamma(d, b, c).grad(a) - geo.gamma(d, a, c).grad(b);
          for (std::size_t e = 0; e < dim; ++e)
            r += geo.gamma(d, a, e).value() * geo.gamma(e, b, c).value() -
                 geo.gamma(d, b, e).value() * geo.gamma(e, a, c).value();
          out(d) += xy * z(c) * r;
        }
      }
  return out;
}

CVec curvature(const ChartedStructure& chart, const Point& p, const CVec& x, const CVec& y,
               const CVec& z) {
  return curvature(LocalGeometry(chart, p), x, y, z);
}

namespace {

std::vector<Complex> exterior_derivative_of(const JetMatrix& k) {
  const std::size_t dim = k.rows();
  std::vector<Complex> out(dim * dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c)
        out[(a * dim + b) * dim + c] = k(b, c).grad(a) + k(c, a).grad(b) + k(a, b).grad(c);
  return out;
}

} // namespace

std::vector<Complex> exterior_derivative_2form(const LocalGeometry& geo) {
  return exterior_derivative_of(geo.kappa());
}

// Needs only kappa, so it also works where J or g are ill-behaved.
std::vector<Complex> exterior_derivative_2form(const ChartedStructure& chart, const Point& x) {
  return exterior_derivative_of(chart.kappa(x));
}

Complex evaluate_3form(const std::vector<Complex>& form, std::size_t dim, const CVec& x,
                       const CVec& y, const CVec& z) {
  Complex acc{};
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) acc += form[(a * dim + b) * dim + c] * x(a) * y(b) * z(c);
  return acc;
}

void StructureResiduals::merge_max(const StructureResiduals& o) {
  kappa_antisymmetry = std::max(kappa_antisymmetry, o.kappa_antisymmetry);
  j_squared = std::max(j_squared, o.j_squared);
  kappa_invariance = std::max(kappa_invariance, o.kappa_invariance);
  metric_positivity = std::max(metric_positivity, o.metric_positivity);
  kappa_closedness = std::max(kappa_closedness, o.kappa_closedness);
  kappa_nondegeneracy = std::max(kappa_nondegeneracy, o.kappa_nondegeneracy);
}

std::vector<std::string> StructureResiduals::failing(double tol) const {
  std::vector<std::string> names;
  if (!(kappa_antisymmetry < tol)) names.emplace_back("kappa_antisymmetric");
  if (!(j_squared < tol)) names.emplace_back("j_squared_minus_identity");
  if (!(kappa_invariance < tol)) names.emplace_back("kappa_j_invariant");
  if (!(metric_positivity < tol)) names.emplace_back("metric_positive_definite");
  if (!(kappa_closedness < tol)) names.emplace_back("kappa_closed");
  if (!(kappa_nondegeneracy < tol)) names.emplace_back("kappa_nondegenerate");
  return names;
}

StructureResiduals structure_residuals(const ChartedStructure& chart, const Point& x) {
  const std::size_t dim = chart.dim();
  const JetMatrix k = chart.kappa(x);
  const JetMatrix j = chart.j(x);
  StructureResiduals r;
  r.kappa_antisymmetry = distance(k, -1.0 * k.transpose());
  r.j_squared = distance(j * j, -1.0 * JetMatrix::identity(dim, dim));
  r.kappa_invariance = distance(j.transpose() * k * j, k);

  const Eigen::MatrixXcd g = (j.transpose() * k).value();
  const Eigen::MatrixXd sym = 0.5 * (g + g.transpose()).real();
  const double lambda_min = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(sym).eigenvalues()(0);
  r.metric_positivity = std::max(0.0, 1.0 - lambda_min / kPositivityFloor);

  for (const Complex& v : exterior_derivative_2form(chart, x))
    r.kappa_closedness = std::max(r.kappa_closedness, std::abs(v));

  const double det = std::abs(k.value().determinant());
  r.kappa_nondegeneracy = std::max(0.0, 1.0 - det / kPositivityFloor);
  return r;
}

StructureResiduals validate(const ChartedStructure& chart, const std::vector<Point>& points) {
  StructureResiduals all;
  for (const auto& p : points) all.merge_max(structure_residuals(chart, p));
  return all;
}

} // namespace akl
