#pragma once

#include "akl/jet_linalg.hpp"
#include "akl/polynomial.hpp"

#include <functional>
#include <string>
#include <vector>

namespace akl {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Maps a chart point to a dim x dim matrix of order-2 jets in the chart
/// coordinates around that point. Must be pure.
using MatrixProvider = std::function<JetMatrix(const Point&)>;

/// A chart of a 2n-dimensional manifold carrying a 2-form kappa and an almost
/// complex structure J, both given as jet-valued providers.
///
/// Index conventions: kappa(a, b) = kappa(e_a, e_b); J(c, b) = J^c_b, i.e.
/// column b holds J e_b. The real coordinates are ordered (x_1, y_1, ...,
/// x_n, y_n). Immutable after construction.
class ChartedStructure {
public:
  ChartedStructure(std::string name, int n, MatrixProvider kappa, MatrixProvider j,
                   std::vector<Interval> domain, bool symplectic = true);

  const std::string& name() const noexcept { return name_; }
  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(2 * n_); }
  const std::vector<Interval>& domain() const noexcept { return domain_; }
  /// False for charts whose 2-form is deliberately not closed.
  bool symplectic() const noexcept { return symplectic_; }

  bool contains(const Point& x) const noexcept;
  void require_in_domain(const Point& x) const;

  JetMatrix kappa(const Point& x) const;
  JetMatrix j(const Point& x) const;

private:
  JetMatrix checked(const MatrixProvider& provider, const Point& x, const char* what) const;

  std::string name_;
  int n_;
  MatrixProvider kappa_;
  MatrixProvider j_;
  std::vector<Interval> domain_;
  bool symplectic_;
};

/// g(X, Y) = kappa(J X, Y) and its inverse, as jets at a point.
struct MetricData {
  JetMatrix g;
  JetMatrix g_inv;
};

/// Christoffel symbols Gamma^c_ab of the Levi-Civita connection, order-1 jets.
struct ConnectionData {
  std::size_t dim = 0;
  std::vector<Jet2> gamma;

  const Jet2& operator()(std::size_t c, std::size_t a, std::size_t b) const {
    return gamma[(c * dim + a) * dim + b];
  }
};

MetricData metric_from_calibration(const JetMatrix& kappa, const JetMatrix& j);
MetricData metric_from_calibration(const ChartedStructure& chart, const Point& x);
ConnectionData christoffel(const MetricData& metric);
ConnectionData christoffel(const ChartedStructure& chart, const Point& x);

/// kappa-calibrated J from kappa and an auxiliary Riemannian metric h:
/// with kappa(u, v) = h(A u, v), J = -A (-A^2)^{-1/2}. The square roots are
/// taken on the symmetrized operator h^{1/2} A h^{-1/2}, so both are of
/// symmetric positive-definite matrices.
JetMatrix calibrated_j(const JetMatrix& kappa, const JetMatrix& h);
MatrixProvider calibrated_j_from_metric(MatrixProvider kappa, MatrixProvider h);

/// Standard constant structures: J e_{x_i} = e_{y_i}, kappa(e_{y_i}, e_{x_i}) = 1,
/// so that kappa(J., .) is the Euclidean metric.
Eigen::MatrixXcd standard_j(int n);
Eigen::MatrixXcd standard_kappa(int n);

/// Everything needed to differentiate at one point: kappa, J, g, g^{-1} as
/// order-2 jets and the Christoffel symbols as order-1 jets.
class LocalGeometry {
public:
  LocalGeometry(const ChartedStructure& chart, const Point& x);

  std::size_t dim() const noexcept { return dim_; }
  int n() const noexcept { return static_cast<int>(dim_ / 2); }
  const Point& point() const noexcept { return x_; }
  const JetMatrix& kappa() const noexcept { return kappa_; }
  const JetMatrix& j() const noexcept { return j_; }
  const JetMatrix& g() const noexcept { return metric_.g; }
  const JetMatrix& g_inv() const noexcept { return metric_.g_inv; }
  const ConnectionData& connection() const noexcept { return connection_; }
  const Jet2& gamma(std::size_t c, std::size_t a, std::size_t b) const {
    return connection_(c, a, b);
  }

  JetVec constant(const CVec& v) const { return constant_germ(v, dim_); }
  JetVec apply_j(const JetVec& v) const { return j_ * v; }
  /// (v - iJv) / 2 and (v + iJv) / 2.
  JetVec project_10(const JetVec& v) const;
  JetVec project_01(const JetVec& v) const;
  CVec project_10(const CVec& v) const;
  CVec project_01(const CVec& v) const;
  /// Complex-bilinear g(u, v).
  Jet2 pairing(const JetVec& u, const JetVec& v) const;
  Complex pairing(const CVec& u, const CVec& v) const;

private:
  std::size_t dim_;
  Point x_;
  JetMatrix kappa_;
  JetMatrix j_;
  MetricData metric_;
  ConnectionData connection_;
};

/// u^a d_a v (componentwise), one order below the lower of the inputs.
JetVec directional_derivative(const JetVec& u, const JetVec& v);
Jet2 directional_derivative(const JetVec& u, const Jet2& f);
/// Lie bracket [u, v]^c = u^a d_a v^c - v^a d_a u^c.
JetVec bracket(const JetVec& u, const JetVec& v);
/// (nabla_u v)^c = u^a d_a v^c + u^a Gamma^c_ab v^b.
JetVec covariant_derivative(const LocalGeometry& geo, const JetVec& u, const JetVec& v);
CVec covariant_derivative_vec(const ChartedStructure& chart, const Point& x, const CVec& direction,
                              const PolyVectorField& field);

/// R(X, Y) Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
CVec curvature(const LocalGeometry& geo, const CVec& x, const CVec& y, const CVec& z);
CVec curvature(const ChartedStructure& chart, const Point& p, const CVec& x, const CVec& y,
               const CVec& z);

/// (d kappa)_abc = d_a kappa_bc + d_b kappa_ca + d_c kappa_ab, flattened (a, b, c).
std::vector<Complex> exterior_derivative_2form(const LocalGeometry& geo);
std::vector<Complex> exterior_derivative_2form(const ChartedStructure& chart, const Point& x);
Complex evaluate_3form(const std::vector<Complex>& form, std::size_t dim, const CVec& x,
                       const CVec& y, const CVec& z);

/// Residuals of the six structure invariants at a point (max-abs over all
/// jet components where jets are involved). Positivity and non-degeneracy
/// are reported as max(0, 1 - margin / floor), so 0 means comfortably
/// satisfied and 1 means violated.
struct StructureResiduals {
  double kappa_antisymmetry = 0.0;
  double j_squared = 0.0;
  double kappa_invariance = 0.0;
  double metric_positivity = 0.0;
  double kappa_closedness = 0.0;
  double kappa_nondegeneracy = 0.0;

  void merge_max(const StructureResiduals& other);
  /// Names of the invariants whose residual reaches `tol`.
  std::vector<std::string> failing(double tol) const;
};

inline constexpr double kPositivityFloor = 1e-6;

StructureResiduals structure_residuals(const ChartedStructure& chart, const Point& x);
StructureResiduals validate(const ChartedStructure& chart, const std::vector<Point>& points);

} // namespace akl
