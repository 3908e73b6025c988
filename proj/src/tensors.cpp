#include "akl/tensors.hpp"

#include "akl/error.hpp"

#include <algorithm>
#include <cmath>

namespace akl {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kType10Tol = 1e-9;

TensorValue make_tensor(TensorKind kind, const LocalGeometry& geo, std::size_t lower) {
  const std::size_t dim = geo.dim();
  std::size_t count = dim;
  for (std::size_t k = 0; k < lower; ++k) count *= dim;
  return TensorValue{kind, dim, lower, std::vector<Jet2>(count, Jet2(dim)), geo.point()};
}

Jet2& slot(TensorValue& t, std::size_t c, std::size_t a, std::size_t b) {
  return t.components[(c * t.dim + a) * t.dim + b];
}

void require_type10(const LocalGeometry& geo, const JetVec& v, const char* name) {
  const double r = max_abs(geo.project_01(values(v)));
  if (r > kType10Tol)
    throw Error(ErrorKind::NotType10, std::string(name) + " has (0,1) part " + std::to_string(r));
}

} // namespace

std::string_view to_string(TensorKind kind) noexcept {
  switch (kind) {
  case TensorKind::Nijenhuis: return "NIJENHUIS";
  case TensorKind::NablaJ: return "NABLA_J";
  case TensorKind::BTensor: return "B_TENSOR";
  case TensorKind::NablaB: return "NABLA_B";
  case TensorKind::Curvature: return "CURVATURE";
  }
  return "UNKNOWN";
}

double max_abs(const CVec& v) noexcept { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

JetVec contract(const TensorValue& t, const JetVec& x, const JetVec& y) {
  if (t.lower != 2 || x.size() != t.dim || y.size() != t.dim)
    throw Error(ErrorKind::ShapeMismatch, "contract expects a (1,2) tensor and two vectors");
  JetVec r;
  r.reserve(t.dim);
  for (std::size_t c = 0; c < t.dim; ++c) {
    Jet2 acc(t.dim);
    for (std::size_t a = 0; a < t.dim; ++a) {
      Jet2 inner(t.dim);
      for (std::size_t b = 0; b < t.dim; ++b) inner += t.at(c, a, b) * y[b];
      acc += x[a] * inner;
    }
    r.push_back(std::move(acc));
  }
  return r;
}

CVec contract(const TensorValue& t, const CVec& x, const CVec& y) {
  if (t.lower != 2 || static_cast<std::size_t>(x.size()) != t.dim ||
      static_cast<std::size_t>(y.size()) != t.dim)
    throw Error(ErrorKind::ShapeMismatch, "contract expects a (1,2) tensor and two vectors");
  CVec r = CVec::Zero(t.dim);
  for (std::size_t c = 0; c < t.dim; ++c)
    for (std::size_t a = 0; a < t.dim; ++a)
      for (std::size_t b = 0; b < t.dim; ++b) r(c) += t.at(c, a, b).value() * x(a) * y(b);
  return r;
}

JetVec nijenhuis(const LocalGeometry& geo, const JetVec& x, const JetVec& y) {
  const JetVec jx = geo.apply_j(x);
  const JetVec jy = geo.apply_j(y);
  return bracket(jx, jy) - geo.apply_j(bracket(jx, y)) - geo.apply_j(bracket(x, jy)) -
         bracket(x, y);
}

CVec nijenhuis(const ChartedStructure& chart, const Point& p, const CVec& x, const CVec& y) {
  const LocalGeometry geo(chart, p);
  return values(nijenhuis(geo, geo.constant(x), geo.constant(y)));
}

TensorValue nijenhuis_tensor(const LocalGeometry& geo) {
  const std::size_t dim = geo.dim();
  const JetMatrix& j = geo.j();
  std::vector<JetMatrix> dj;
  for (std::size_t a = 0; a < dim; ++a) dj.push_back(j.derivative(a));
  TensorValue t = make_tensor(TensorKind::Nijenhuis, geo, 2);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        Jet2 acc(dim);
        for (std::size_t e = 0; e < dim; ++e) {
          acc += j(e, a) * dj[e](c, b) - j(e, b) * dj[e](c, a);
          acc += j(c, e) * dj[b](e, a) - j(c, e) * dj[a](e, b);
        }
        slot(t, c, a, b) = std::move(acc);
      }
  return t;
}

TensorValue nabla_j(const LocalGeometry& geo) {
  const std::size_t dim = geo.dim();
  const JetMatrix& j = geo.j();
  TensorValue t = make_tensor(TensorKind::NablaJ, geo, 2);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        Jet2 acc = j(c, b).derivative(a);
        for (std::size_t d = 0; d < dim; ++d)
          acc += geo.gamma(c, a, d) * j(d, b) - geo.gamma(d, a, b) * j(c, d);
        slot(t, c, a, b) = std::move(acc);
      }
  return t;
}

TensorValue nabla_j(const ChartedStructure& chart, const Point& p) {
  return nabla_j(LocalGeometry(chart, p));
}

TensorValue b_tensor(const LocalGeometry& geo) {
  const std::size_t dim = geo.dim();
  const JetMatrix& j = geo.j();
  const TensorValue nj = nabla_j(geo);
  TensorValue t = make_tensor(TensorKind::BTensor, geo, 2);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        Jet2 acc(dim);
        for (std::size_t d = 0; d < dim; ++d)
          acc += j(c, d) * nj.at(d, a, b) - j(d, a) * nj.at(c, d, b);
        slot(t, c, a, b) = std::move(acc);
      }
  return t;
}

TensorValue nabla_b_tensor(const LocalGeometry& geo) {
  const std::size_t dim = geo.dim();
  const TensorValue b = b_tensor(geo);
  TensorValue t = make_tensor(TensorKind::NablaB, geo, 3);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t e = 0; e < dim; ++e)
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t bb = 0; bb < dim; ++bb) {
          Complex acc = b.at(c, a, bb).grad(e);
          for (std::size_t d = 0; d < dim; ++d)
            acc += geo.gamma(c, e, d).value() * b.at(d, a, bb).value() -
                   geo.gamma(d, e, a).value() * b.at(c, d, bb).value() -
                   geo.gamma(d, e, bb).value() * b.at(c, a, d).value();
          t.components[((c * dim + e) * dim + a) * dim + bb] = Jet2(dim, acc, 0);
        }
  return t;
}

TensorValue curvature_tensor(const LocalGeometry& geo) {
  const std::size_t dim = geo.dim();
  TensorValue t = make_tensor(TensorKind::Curvature, geo, 3);
  CVec ea = CVec::Zero(dim), eb = CVec::Zero(dim), ec = CVec::Zero(dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) {
        ea.setZero();
        eb.setZero();
        ec.setZero();
        ea(a) = eb(b) = ec(c) = 1.0;
        const CVec r = curvature(geo, ea, eb, ec);
        for (std::size_t d = 0; d < dim; ++d)
          t.components[((d * dim + a) * dim + b) * dim + c] = Jet2(dim, r(d), 0);
      }
  return t;
}

CVec b_tensor(const ChartedStructure& chart, const Point& p, const CVec& x, const CVec& y) {
  return contract(b_tensor(LocalGeometry(chart, p)), x, y);
}

CVec nabla_b(const LocalGeometry& geo, const CVec& u, const CVec& x, const CVec& y) {
  const std::size_t dim = geo.dim();
  const TensorValue b = b_tensor(geo);
  CVec r = CVec::Zero(dim);
  for (std::size_t e = 0; e < dim; ++e) {
    if (u(e) == Complex{}) continue;
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t bb = 0; bb < dim; ++bb) {
        const Complex w = u(e) * x(a) * y(bb);
        if (w == Complex{}) continue;
        for (std::size_t c = 0; c < dim; ++c) {
          Complex acc = b.at(c, a, bb).grad(e);
          for (std::size_t d = 0; d < dim; ++d)
            acc += geo.gamma(c, e, d).value() * b.at(d, a, bb).value() -
                   geo.gamma(d, e, a).value() * b.at(c, d, bb).value() -
                   geo.gamma(d, e, bb).value() * b.at(c, a, d).value();
          r(c) += w * acc;
        }
      }
  }
  return r;
}

CVec nabla_b(const ChartedStructure& chart, const Point& p, const CVec& u, const CVec& x,
             const CVec& y) {
  return nabla_b(LocalGeometry(chart, p), u, x, y);
}

CVec nabla_pp_b(const LocalGeometry& geo, const CVec& u, const CVec& x, const CVec& y) {
  return nabla_b(geo, geo.project_01(u), x, y);
}

CVec nabla_pp_b(const ChartedStructure& chart, const Point& p, const CVec& u, const CVec& x,
                const CVec& y) {
  return nabla_pp_b(LocalGeometry(chart, p), u, x, y);
}

Complex hermitian_relation_residual(const LocalGeometry& geo, const CVec& x, const CVec& y,
                                    const CVec& z) {
  const Eigen::MatrixXcd j = geo.j().value();
  const std::vector<Complex> dk = exterior_derivative_2form(geo);
  const CVec nabla_x_j_y = contract(nabla_j(geo), x, y);
  const CVec n_yz = contract(nijenhuis_tensor(geo), y, z);
  const Complex lhs = 2.0 * geo.pairing(nabla_x_j_y, z);
  const Complex rhs = evaluate_3form(dk, geo.dim(), x, j * y, j * z) -
                      evaluate_3form(dk, geo.dim(), x, y, z) + geo.pairing(n_yz, CVec(j * x));
  return lhs - rhs;
}

Complex hermitian_relation_residual(const ChartedStructure& chart, const Point& p, const CVec& x,
                                    const CVec& y, const CVec& z) {
  return hermitian_relation_residual(LocalGeometry(chart, p), x, y, z);
}

Complex symplectic_relation_residual(const LocalGeometry& geo, const CVec& x, const CVec& y,
                                     const CVec& z) {
  const Eigen::MatrixXcd j = geo.j().value();
  const CVec nabla_x_j_y = contract(nabla_j(geo), x, y);
  const CVec n_yz = contract(nijenhuis_tensor(geo), y, z);
  return 2.0 * geo.pairing(nabla_x_j_y, z) - geo.pairing(n_yz, CVec(j * x));
}

Lemma3Evaluation lemma3_identity(const LocalGeometry& geo, const JetVec& z, const JetVec& w,
                                 const JetVec& h) {
  require_type10(geo, z, "Z");
  require_type10(geo, w, "W");
  require_type10(geo, h, "H");
  const TensorValue b = b_tensor(geo);
  const JetVec zb = conj(z);

  // left side, as the field expression of the tensor derivative
  const JetVec nabla_zb_w = covariant_derivative(geo, zb, w);
  const JetVec nabla_zb_h = covariant_derivative(geo, zb, h);
  const CVec lhs_a = 0.5 * values(covariant_derivative(geo, zb, contract(b, w, h)));
  const CVec lhs_b = 0.5 * values(contract(b, nabla_zb_w, h));
  const CVec lhs_c = 0.5 * values(contract(b, w, nabla_zb_h));

  // right side
  const CVec curv = curvature(geo, values(zb), values(w), values(h));
  const JetVec nabla_w_h = covariant_derivative(geo, w, h);
  const CVec t2 = kI * values(covariant_derivative(geo, zb, geo.apply_j(nabla_w_h)));
  const CVec t3 = -kI * values(geo.apply_j(covariant_derivative(geo, w, nabla_zb_h)));
  const CVec t4 = -kI * values(geo.apply_j(covariant_derivative(geo, nabla_zb_w, h)));
  const CVec t5 = -values(covariant_derivative(geo, covariant_derivative(geo, w, zb), h));

  Lemma3Evaluation ev;
  ev.lhs = lhs_a - lhs_b - lhs_c;
  ev.rhs = curv + t2 + t3 + t4 + t5;
  ev.residual = ev.lhs - ev.rhs;
  for (const CVec* term : {&lhs_a, &lhs_b, &lhs_c, &curv, &t2, &t3, &t4, &t5})
    ev.max_term = std::max(ev.max_term, max_abs(*term));
  return ev;
}

CVec lemma3_identity_residual(const LocalGeometry& geo, const JetVec& z, const JetVec& w,
                              const JetVec& h) {
  return lemma3_identity(geo, z, w, h).residual;
}

JetVec type10_germ(const LocalGeometry& geo, const PolyVectorField& field) {
  return geo.project_10(field.germ(geo.point()));
}

} // namespace akl
