#pragma once

#include "akl/geometry.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace akl {

enum class FrameKind { Pointwise, Special, Gnh };

std::string_view to_string(FrameKind kind) noexcept;

/// n complex vector fields around a base point o, with polynomial
/// coefficients of total degree <= 2 in t = x - o. Special and GNH frames are
/// the 2-jets at o of genuine (1,0) fields.
struct Frame {
  FrameKind kind = FrameKind::Pointwise;
  Point base_point;
  std::vector<PolyVectorField> fields;

  std::size_t size() const noexcept { return fields.size(); }
  /// Field germs at the base point.
  std::vector<JetVec> germs() const;
  /// Columns W_1(o), ..., W_n(o).
  Eigen::MatrixXcd values() const;
};

/// Named residuals of the frame conditions at the base point:
///   type10                 |P^{0,1} W_i(o)|
///   special_bracket_zz     |[W_i, W_j](o) + N(W_i, W_j)(o) / 4|
///   special_bracket_mixed  |[Wbar_i, W_j](o)|
///   special_dG, gnh_cond3_dG  |dG_rs[o]|
///   gnh_cond1              |nabla_{W_k} Wbar_i(o)|
///   gnh_cond2              |P^{1,0} nabla_{W_k} W_i(o)|
///   gnh_cond3_G            |G_rs(o) - delta_rs|
///   gnh_cond4              |nabla_{W_r} nabla_{Wbar_k} W_i(o)|
///   kahler_reduction       |nabla_{W_i} W_j(o)|
struct FrameDiagnostics {
  std::map<std::string, double> residuals;

  double at(const std::string& name) const;
};

/// Polynomial field whose coefficients are the 2-jet of `germ` at `origin`.
PolyVectorField field_from_germ(const Point& origin, const JetVec& germ);
/// 2-jet at the base point of P^{1,0}(x) q(x); q must have origin geo.point().
PolyVectorField type10_field(const LocalGeometry& geo, const PolyVectorField& q);

/// Constant frame spanning T^{1,0} at o, orthonormal for g(u, vbar).
Frame pointwise_frame(const ChartedStructure& chart, const Point& o);

inline constexpr double kConstructionTol = 1e-8;

/// Z_i = P^{1,0}(x) (V_i + sum_a t_a sum_h C^(a)_hi V_h) with V the pointwise
/// frame. C is the minimal-norm least-squares solution of the bracket and
/// metric conditions at o, which are affine in the real and imaginary parts
/// of C. Throws ConstructionFailed when the residual stays above 1e-8.
Frame special_frame(const ChartedStructure& chart, const Point& o);

/// Quadratic correction data of the GNH construction.
struct GnhConstruction {
  Frame special;
  Frame gnh;
  /// Rows are the linear coordinates z_a = zeta_a . t dual to the special frame.
  Eigen::MatrixXcd zeta;
  /// A_si as polynomials in t, indexed s * n + i.
  std::vector<Polynomial> a;
};

GnhConstruction gnh_construction(const ChartedStructure& chart, const Point& o);
/// W_i = Z_i - sum_h A_hi Z_h truncated at degree 2.
Frame gnh_frame(const ChartedStructure& chart, const Point& o);

FrameDiagnostics verify_frame(const ChartedStructure& chart, const Frame& frame);

/// Consequences at o for a special frame:
///   eq5    |nabla_{Zbar_k} Z_r(o)| and |nabla_{Z_r} Zbar_k(o)|
///   eq6    |P^{1,0} nabla_{Z_k} Z_i(o)|
///   item3  |P^{0,1} nabla_{Z_r} nabla_{Zbar_k} Z_i(o)|
struct Step1Residuals {
  double eq5 = 0.0;
  double eq6 = 0.0;
  double item3 = 0.0;
};

Step1Residuals step1_residuals(const ChartedStructure& chart, const Frame& special);

/// |P^{0,1} nabla_{Zbar_1} Z_2(o)| for (1,0) fields (2-jets of (1,0) fields
/// around o). Throws NotType10 when a field is not (1,0) at o beyond 1e-9.
double verify_corollary1(const ChartedStructure& chart, const Point& o, const PolyVectorField& z1,
                         const PolyVectorField& z2);

/// (max |nabla_{W_r} nabla_{Wbar_k} W_i(o)|, max |nabla_{W_k} nabla_{W_j} Wbar_i(o)|).
std::pair<double, double> mutual_exclusivity_probe(const ChartedStructure& chart,
                                                   const Frame& frame);
std::pair<double, double> mutual_exclusivity_probe(const ChartedStructure& chart,
                                                   const Point& o);

/// max over i, j, k, r of
/// |g((nabla_{Wbar_i} J) nabla_{W_j} W_k, Wbar_r) - 2i g(nabla_{W_j} W_k, nabla_{Wbar_i} Wbar_r)|(o).
double proof_line_residual(const ChartedStructure& chart, const Frame& frame);

} // namespace akl
