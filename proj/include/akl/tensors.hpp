#pragma once

#include "akl/geometry.hpp"

#include <string_view>
#include <vector>

namespace akl {

enum class TensorKind { Nijenhuis, NablaJ, BTensor, NablaB, Curvature };

std::string_view to_string(TensorKind kind) noexcept;

/// Tensor components in the coordinate basis at a point. Layout is row-major
/// over (upper index, lower indices...):
///   Nijenhuis  N^c_ab          (c, a, b)   N(e_a, e_b)
///   NablaJ     (nabla_a J)^c_b (c, a, b)
///   BTensor    B^c_ab          (c, a, b)   B(e_a, e_b)
///   NablaB     (nabla_e B)^c_ab (c, e, a, b)
///   Curvature  R^d_abc         (d, a, b, c) R(e_a, e_b) e_c
struct TensorValue {
  TensorKind kind{};
  std::size_t dim = 0;
  std::size_t lower = 0;
  std::vector<Jet2> components;
  Point base_point;

  const Jet2& at(std::size_t c, std::size_t a, std::size_t b) const {
    return components[(c * dim + a) * dim + b];
  }
  const Jet2& at(std::size_t c, std::size_t e, std::size_t a, std::size_t b) const {
    return components[((c * dim + e) * dim + a) * dim + b];
  }
};

/// T^c_ab x^a y^b for a tensor with two lower indices; germ in, germ out.
JetVec contract(const TensorValue& t, const JetVec& x, const JetVec& y);
CVec contract(const TensorValue& t, const CVec& x, const CVec& y);

/// N_J(X, Y) = [JX, JY] - J[JX, Y] - J[X, JY] - [X, Y] evaluated on field
/// germs. On constant germs this is the tensor value.
JetVec nijenhuis(const LocalGeometry& geo, const JetVec& x, const JetVec& y);
CVec nijenhuis(const ChartedStructure& chart, const Point& p, const CVec& x, const CVec& y);

/// Component form of N_J from J and its first derivatives (order-1 jets).
TensorValue nijenhuis_tensor(const LocalGeometry& geo);
/// (nabla_a J)^c_b = d_a J^c_b + Gamma^c_ad J^d_b - Gamma^d_ab J^c_d (order-1 jets).
TensorValue nabla_j(const LocalGeometry& geo);
TensorValue nabla_j(const ChartedStructure& chart, const Point& p);
/// B^c_ab = J^c_d (nabla_a J)^d_b - J^d_a (nabla_d J)^c_b (order-1 jets).
TensorValue b_tensor(const LocalGeometry& geo);
/// (nabla_e B)^c_ab, value level.
TensorValue nabla_b_tensor(const LocalGeometry& geo);
TensorValue curvature_tensor(const LocalGeometry& geo);

CVec b_tensor(const ChartedStructure& chart, const Point& p, const CVec& x, const CVec& y);
/// (nabla_U B)(X, Y) from the component formula.
CVec nabla_b(const LocalGeometry& geo, const CVec& u, const CVec& x, const CVec& y);
CVec nabla_b(const ChartedStructure& chart, const Point& p, const CVec& u, const CVec& x,
             const CVec& y);
/// nabla_b along the (0,1) part of U.
CVec nabla_pp_b(const LocalGeometry& geo, const CVec& u, const CVec& x, const CVec& y);
CVec nabla_pp_b(const ChartedStructure& chart, const Point& p, const CVec& u, const CVec& x,
                const CVec& y);

/// 2g((nabla_X J)Y, Z) - [dk(X, JY, JZ) - dk(X, Y, Z) + g(N(Y, Z), JX)].
Complex hermitian_relation_residual(const LocalGeometry& geo, const CVec& x, const CVec& y,
                                    const CVec& z);
Complex hermitian_relation_residual(const ChartedStructure& chart, const Point& p, const CVec& x,
                                    const CVec& y, const CVec& z);
/// Same relation with the dk terms dropped (closed kappa).
Complex symplectic_relation_residual(const LocalGeometry& geo, const CVec& x, const CVec& y,
                                     const CVec& z);

/// Both sides of the curvature identity relating (1/2)(nabla_Zbar B)(W, H) to
/// R(Zbar, W)H and first/second covariant derivatives of (1,0) fields.
struct Lemma3Evaluation {
  CVec lhs;
  CVec rhs;
  CVec residual;
  /// Largest max-abs among the individual terms on either side.
  double max_term = 0.0;
};

/// Z, W, H are germs of (1,0) fields; throws NotType10 when one of them is
/// not annihilated by the (0,1) projector at the point (beyond 1e-9).
Lemma3Evaluation lemma3_identity(const LocalGeometry& geo, const JetVec& z, const JetVec& w,
                                 const JetVec& h);
CVec lemma3_identity_residual(const LocalGeometry& geo, const JetVec& z, const JetVec& w,
                              const JetVec& h);

/// Germ of the pointwise (1,0) projection of a polynomial field.
JetVec type10_germ(const LocalGeometry& geo, const PolyVectorField& field);

double max_abs(const CVec& v) noexcept;

} // namespace akl
