#pragma once

#include "akl/jet.hpp"
#include "akl/jet_linalg.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace akl {

using Point = std::vector<double>;
using Exponents = std::vector<int>;

/// Multivariate polynomial with complex coefficients in `nvars` real variables.
/// Terms are kept in a sorted map, so iteration order (and everything built
/// from it) is deterministic.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, Complex c);
  static Polynomial monomial(Exponents exponents, Complex coeff);
  /// c * x_index
  static Polynomial linear(std::size_t nvars, std::size_t index, Complex c = 1.0);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponents, Complex>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept;

  void add_term(const Exponents& exponents, Complex coeff);

  Complex evaluate(const Point& x) const;
  /// Exact order-2 jet of the polynomial at x.
  Jet2 jet(const Point& x) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial conj() const;
  /// Drops every term of total degree above `max_degree`.
  Polynomial truncated(int max_degree) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(Complex c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Degree-2 Taylor polynomial in t = x - origin whose jet at `origin`
  /// equals `j` (requires an order-2 jet).
  static Polynomial from_jet(const Jet2& j);

private:
  void prune();

  std::size_t nvars_ = 0;
  std::map<Exponents, Complex> terms_;
};

/// Vector field whose coordinate components are polynomials in the shifted
/// coordinates t = x - origin.
struct PolyVectorField {
  Point origin;
  std::vector<Polynomial> components;

  std::size_t dim() const noexcept { return components.size(); }
  int degree() const noexcept;
  /// Field germ (order-2 jets, derivatives with respect to x) at x.
  JetVec germ(const Point& x) const;
  CVec value(const Point& x) const;
  PolyVectorField conj() const;
};

} // namespace akl
