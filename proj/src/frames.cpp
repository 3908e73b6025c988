#include "akl/frames.hpp"

#include "akl/error.hpp"
#include "akl/tensors.hpp"

#include <algorithm>
#include <cmath>

namespace akl {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kType10Tol = 1e-9;

using Named = std::vector<std::pair<std::string, double>>;

double max_over(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

std::vector<JetVec> conj_all(const std::vector<JetVec>& fields) {
  std::vector<JetVec> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back(conj(f));
  return out;
}

/// Residual blocks of the special-frame conditions at o, as complex vectors.
struct SpecialConditions {
  std::vector<Complex> bracket_zz;
  std::vector<Complex> bracket_mixed;
  std::vector<Complex> dg;
};

SpecialConditions special_conditions(const LocalGeometry& geo, const TensorValue& nij,
                                     const std::vector<JetVec>& z) {
  SpecialConditions out;
  const std::size_t n = z.size();
  const std::size_t dim = geo.dim();
  const std::vector<JetVec> zb = conj_all(z);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const CVec r = values(bracket(z[i], z[j])) + 0.25 * contract(nij, values(z[i]), values(z[j]));
      for (std::size_t c = 0; c < dim; ++c) out.bracket_zz.push_back(r(c));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CVec r = values(bracket(zb[i], z[j]));
      for (std::size_t c = 0; c < dim; ++c) out.bracket_mixed.push_back(r(c));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Jet2 gik = geo.pairing(z[i], zb[k]);
      for (std::size_t a = 0; a < dim; ++a) out.dg.push_back(gik.grad(a));
    }
  return out;
}

double max_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

/// Germs Z_i = P^{1,0}(V_i + sum_a t_a sum_h C^(a)_hi V_h) for real parameters
/// u, where entry (a, h, i) of C is u[2k] + i u[2k + 1] with k = (a n + h) n + i.
std::vector<JetVec> special_germs(const LocalGeometry& geo, const std::vector<CVec>& v,
                                  const Eigen::VectorXd& u) {
  const std::size_t n = v.size();
  const std::size_t dim = geo.dim();
  std::vector<JetVec> z;
  for (std::size_t i = 0; i < n; ++i) {
    JetVec q;
    for (std::size_t c = 0; c < dim; ++c) {
      Jet2 comp(dim, v[i](c));
      for (std::size_t a = 0; a < dim; ++a) {
        Complex g{};
        for (std::size_t h = 0; h < n; ++h) {
          const std::size_t k = (a * n + h) * n + i;
          g += Complex(u(2 * k), u(2 * k + 1)) * v[h](c);
        }
        comp.set_grad(a, g);
      }
      q.push_back(std::move(comp));
    }
    z.push_back(geo.project_10(q));
  }
  return z;
}

Eigen::VectorXd realify(const SpecialConditions& s) {
  std::vector<Complex> all = s.bracket_zz;
  all.insert(all.end(), s.bracket_mixed.begin(), s.bracket_mixed.end());
  all.insert(all.end(), s.dg.begin(), s.dg.end());
  Eigen::VectorXd out(2 * all.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    out(2 * k) = all[k].real();
    out(2 * k + 1) = all[k].imag();
  }
  return out;
}

} // namespace

std::string_view to_string(FrameKind kind) noexcept {
  switch (kind) {
  case FrameKind::Pointwise: return "POINTWISE";
  case FrameKind::Special: return "SPECIAL";
  case FrameKind::Gnh: return "GNH";
  }
  return "UNKNOWN";
}

std::vector<JetVec> Frame::germs() const {
  std::vector<JetVec> out;
  out.reserve(fields.size());
  for (const auto& f : fields) out.push_back(f.germ(base_point));
  return out;
}

Eigen::MatrixXcd Frame::values() const {
  if (fields.empty()) return {};
  Eigen::MatrixXcd m(fields.front().dim(), fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) m.col(i) = fields[i].value(base_point);
  return m;
}

double FrameDiagnostics::at(const std::string& name) const {
  const auto it = residuals.find(name);
  if (it == residuals.end()) throw Error(ErrorKind::IndexOutOfRange, "no residual " + name);
  return it->second;
}

PolyVectorField field_from_germ(const Point& origin, const JetVec& germ) {
  PolyVectorField f{origin, {}};
  for (const auto& c : germ) {
    if (c.order() < Jet2::kMaxOrder)
      throw Error(ErrorKind::InvalidOrder, "field_from_germ needs order-2 jets");
    f.components.push_back(Polynomial::from_jet(c));
  }
  return f;
}

PolyVectorField type10_field(const LocalGeometry& geo, const PolyVectorField& q) {
  if (q.origin != geo.point())
    throw Error(ErrorKind::ShapeMismatch, "field origin differs from the base point");
  return field_from_germ(geo.point(), geo.project_10(q.germ(geo.point())));
}

Frame pointwise_frame(const ChartedStructure& chart, const Point& o) {
  const LocalGeometry geo(chart, o);
  const std::size_t dim = geo.dim();
  const Eigen::MatrixXcd j = geo.j().value();
  const Eigen::MatrixXcd p10 =
      0.5 * (Eigen::MatrixXcd::Identity(dim, dim) - kI * j);
  std::vector<CVec> basis = projector_basis(p10, geo.n());
  const Eigen::MatrixXcd g = geo.g().value();
  auto inner = [&](const CVec& u, const CVec& v) { return (u.transpose() * g * v.conjugate())(0, 0); };
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) basis[i] -= inner(basis[i], basis[k]) * basis[k];
    const double norm = std::sqrt(std::abs(inner(basis[i], basis[i])));
    if (norm < 1e-12) throw Error(ErrorKind::RankMismatch, "degenerate (1,0) basis");
    basis[i] /= norm;
  }
  Frame f{FrameKind::Pointwise, o, {}};
  for (const auto& v : basis) {
    PolyVectorField field{o, {}};
    for (std::size_t c = 0; c < dim; ++c) field.components.push_back(Polynomial::constant(dim, v(c)));
    f.fields.push_back(std::move(field));
  }
  return f;
}

Frame special_frame(const ChartedStructure& chart, const Point& o) {
  const LocalGeometry geo(chart, o);
  const std::size_t dim = geo.dim();
  const std::size_t n = static_cast<std::size_t>(geo.n());
  const TensorValue nij = nijenhuis_tensor(geo);
  const Frame seed = pointwise_frame(chart, o);
  std::vector<CVec> v;
  for (const auto& f : seed.fields) v.push_back(f.value(o));

  const std::size_t unknowns = 2 * dim * n * n;
  auto residual = [&](const Eigen::VectorXd& u) {
    return realify(special_conditions(geo, nij, special_germs(geo, v, u)));
  };
  const Eigen::VectorXd f0 = residual(Eigen::VectorXd::Zero(unknowns));
  Eigen::MatrixXd m(f0.size(), unknowns);
  for (std::size_t k = 0; k < unknowns; ++k)
    m.col(k) = residual(Eigen::VectorXd::Unit(unknowns, k)) - f0;
  const Eigen::VectorXd u = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(m).solve(-f0);

  const std::vector<JetVec> z = special_germs(geo, v, u);
  const SpecialConditions s = special_conditions(geo, nij, z);
  const Named named{{"special_bracket_zz", max_abs(s.bracket_zz)},
                    {"special_bracket_mixed", max_abs(s.bracket_mixed)},
                    {"special_dG", max_abs(s.dg)}};
  for (const auto& [name, r] : named)
    if (!(r < kConstructionTol))
      throw ConstructionFailed("special frame conditions unsolvable at the base point (" + name +
                                   " = " + std::to_string(r) + ")",
                               named);

  Frame f{FrameKind::Special, o, {}};
  for (const auto& zi : z) f.fields.push_back(field_from_germ(o, zi));
  return f;
}

GnhConstruction gnh_construction(const ChartedStructure& chart, const Point& o) {
  GnhConstruction out;
  out.special = special_frame(chart, o);
  const LocalGeometry geo(chart, o);
  const std::size_t dim = geo.dim();
  const std::size_t n = static_cast<std::size_t>(geo.n());
  const std::vector<JetVec> z = out.special.germs();
  const std::vector<JetVec> zb = conj_all(z);

  Eigen::MatrixXcd frame(dim, dim);
  const Eigen::MatrixXcd zo = out.special.values();
  frame << zo, zo.conjugate();
  out.zeta = inverse(JetMatrix::constant(frame, dim)).value().topRows(n);

  std::vector<Polynomial> zc;
  for (std::size_t a = 0; a < n; ++a) {
    Polynomial p(dim);
    for (std::size_t e = 0; e < dim; ++e) p += Polynomial::linear(dim, e, out.zeta(a, e));
    zc.push_back(std::move(p));
  }

  // A_si = sum_ab Z_a(Gamma^s_{bbar i})(o) z_a zbar_b with Gamma^s_{bbar i} = g(nabla_{Zbar_b} Z_i, Zbar_s)
  out.a.assign(n * n, Polynomial(dim));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < n; ++i) {
      const JetVec nabla = covariant_derivative(geo, zb[b], z[i]);
      for (std::size_t s = 0; s < n; ++s) {
        const Jet2 gamma = geo.pairing(nabla, zb[s]);
        for (std::size_t a = 0; a < n; ++a) {
          Complex c{};
          for (std::size_t e = 0; e < dim; ++e) c += zo(e, a) * gamma.grad(e);
          out.a[s * n + i] += c * (zc[a] * zc[b].conj());
        }
      }
    }

  out.gnh = Frame{FrameKind::Gnh, o, {}};
  for (std::size_t i = 0; i < n; ++i) {
    PolyVectorField w = out.special.fields[i];
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t c = 0; c < dim; ++c) w.components[c] -= zo(c, h) * out.a[h * n + i];
    out.gnh.fields.push_back(std::move(w));
  }
  return out;
}

Frame gnh_frame(const ChartedStructure& chart, const Point& o) {
  return gnh_construction(chart, o).gnh;
}

FrameDiagnostics verify_frame(const ChartedStructure& chart, const Frame& frame) {
  const LocalGeometry geo(chart, frame.base_point);
  const std::size_t n = frame.size();
  const std::vector<JetVec> w = frame.germs();
  const std::vector<JetVec> wb = conj_all(w);
  const SpecialConditions s = special_conditions(geo, nijenhuis_tensor(geo), w);

  double type10 = 0.0, cond1 = 0.0, cond2 = 0.0, cond3_g = 0.0, cond4 = 0.0, reduction = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    type10 = std::max(type10, max_abs(geo.project_01(values(w[i]))));
    for (std::size_t k = 0; k < n; ++k) {
      cond1 = std::max(cond1, max_abs(values(covariant_derivative(geo, w[k], wb[i]))));
      const CVec nabla = values(covariant_derivative(geo, w[k], w[i]));
      cond2 = std::max(cond2, max_abs(geo.project_10(nabla)));
      reduction = std::max(reduction, max_abs(nabla));
      const Complex gik = geo.pairing(w[i], wb[k]).value();
      cond3_g = std::max(cond3_g, std::abs(gik - (i == k ? 1.0 : 0.0)));
    }
  }
  cond4 = mutual_exclusivity_probe(chart, frame).first;

  FrameDiagnostics d;
  d.residuals = {{"type10", type10},
                 {"special_bracket_zz", max_abs(s.bracket_zz)},
                 {"special_bracket_mixed", max_abs(s.bracket_mixed)},
                 {"special_dG", max_abs(s.dg)},
                 {"gnh_cond1", cond1},
                 {"gnh_cond2", cond2},
                 {"gnh_cond3_G", cond3_g},
                 {"gnh_cond3_dG", max_abs(s.dg)},
                 {"gnh_cond4", cond4},
                 {"kahler_reduction", reduction}};
  return d;
}

Step1Residuals step1_residuals(const ChartedStructure& chart, const Frame& special) {
  const LocalGeometry geo(chart, special.base_point);
  const std::vector<JetVec> z = special.germs();
  const std::vector<JetVec> zb = conj_all(z);
  Step1Residuals r;
  for (std::size_t k = 0; k < z.size(); ++k)
    for (std::size_t i = 0; i < z.size(); ++i) {
      const JetVec inner = covariant_derivative(geo, zb[k], z[i]);
      r.eq5 = std::max({r.eq5, max_abs(values(inner)),
                        max_abs(values(covariant_derivative(geo, z[i], zb[k])))});
      r.eq6 = std::max(
          r.eq6, max_abs(geo.project_10(values(covariant_derivative(geo, z[k], z[i])))));
      for (std::size_t s = 0; s < z.size(); ++s)
        r.item3 = std::max(
            r.item3, max_abs(geo.project_01(values(covariant_derivative(geo, z[s], inner)))));
    }
  return r;
}

double verify_corollary1(const ChartedStructure& chart, const Point& o, const PolyVectorField& z1,
                         const PolyVectorField& z2) {
  const LocalGeometry geo(chart, o);
  const JetVec g1 = z1.germ(o);
  const JetVec g2 = z2.germ(o);
  for (const JetVec* g : {&g1, &g2}) {
    const double r = max_abs(geo.project_01(values(*g)));
    if (r > kType10Tol)
      throw Error(ErrorKind::NotType10, "field has (0,1) part " + std::to_string(r));
  }
  return max_abs(geo.project_01(values(covariant_derivative(geo, conj(g1), g2))));
}

std::pair<double, double> mutual_exclusivity_probe(const ChartedStructure& chart,
                                                   const Frame& frame) {
  const LocalGeometry geo(chart, frame.base_point);
  const std::vector<JetVec> w = frame.germs();
  const std::vector<JetVec> wb = conj_all(w);
  const std::size_t n = w.size();
  double r1 = 0.0, r2 = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      const JetVec inner1 = covariant_derivative(geo, wb[k], w[i]);
      const JetVec inner2 = covariant_derivative(geo, w[k], wb[i]);
      for (std::size_t r = 0; r < n; ++r) {
        r1 = std::max(r1, max_abs(values(covariant_derivative(geo, w[r], inner1))));
        r2 = std::max(r2, max_abs(values(covariant_derivative(geo, w[r], inner2))));
      }
    }
  return {r1, r2};
}

std::pair<double, double> mutual_exclusivity_probe(const ChartedStructure& chart,
                                                   const Point& o) {
  return mutual_exclusivity_probe(chart, gnh_frame(chart, o));
}

double proof_line_residual(const ChartedStructure& chart, const Frame& frame) {
  const LocalGeometry geo(chart, frame.base_point);
  const TensorValue nj = nabla_j(geo);
  const std::vector<JetVec> w = frame.germs();
  const std::vector<JetVec> wb = conj_all(w);
  const std::size_t n = w.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) {
      const CVec nabla_bar = values(covariant_derivative(geo, wb[i], wb[r]));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const CVec v = values(covariant_derivative(geo, w[j], w[k]));
          const Complex lhs = geo.pairing(contract(nj, values(wb[i]), v), values(wb[r]));
          const Complex rhs = 2.0 * kI * geo.pairing(v, nabla_bar);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
  return worst;
}

} // namespace akl
