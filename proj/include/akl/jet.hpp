#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace akl {

using Complex = std::complex<double>;

/// Order-2 truncated Taylor expansion of a complex-valued scalar in `nvars`
/// real variables: value, gradient and (symmetric) Hessian at a point.
///
/// `order()` is the number of derivative levels that carry information.
/// Providers hand out order-2 jets; taking a partial derivative drops one
/// level, and binary operations keep the smaller order of their operands.
/// Components beyond the valid order are held at zero, so stale data never
/// leaks into later arithmetic. Differentiating an order-0 jet throws.
///
/// The Hessian is stored packed (upper triangle), so symmetry holds by
/// construction.
class Jet2 {
public:
  static constexpr int kMaxOrder = 2;
  static constexpr double kDefaultSingularTol = 1e-12;

  Jet2() = default;
  explicit Jet2(std::size_t nvars, Complex value = {}, int order = kMaxOrder);

  static Jet2 constant(std::size_t nvars, Complex c) { return Jet2(nvars, c); }
  /// Coordinate function x_index around a point whose index-th coordinate is `point_value`.
  static Jet2 variable(std::size_t nvars, std::size_t index, double point_value);

  std::size_t nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }

  Complex value() const noexcept { return data_.empty() ? Complex{} : data_[0]; }
  Complex grad(std::size_t a) const;
  Complex hess(std::size_t a, std::size_t b) const;

  void set_value(Complex v);
  void set_grad(std::size_t a, Complex v);
  void set_hess(std::size_t a, std::size_t b, Complex v);

  /// Partial derivative along coordinate `a`, one order lower.
  Jet2 derivative(std::size_t a) const;
  /// Copy with order capped at `order` (higher components cleared).
  Jet2 truncated(int order) const;
  Jet2 conj() const;

  /// Largest magnitude among the valid components.
  double max_abs() const noexcept;

  Jet2& operator+=(const Jet2& rhs);
  Jet2& operator-=(const Jet2& rhs);
  Jet2& operator*=(const Jet2& rhs);
  Jet2& operator+=(Complex c);
  Jet2& operator-=(Complex c);
  Jet2& operator*=(Complex c);

  friend Jet2 operator-(const Jet2& a);
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b);
  friend Jet2 operator+(Jet2 a, Complex c) { return a += c; }
  friend Jet2 operator+(Complex c, Jet2 a) { return a += c; }
  friend Jet2 operator-(Jet2 a, Complex c) { return a -= c; }
  friend Jet2 operator-(Complex c, const Jet2& a) { return -a + c; }
  friend Jet2 operator*(Jet2 a, Complex c) { return a *= c; }
  friend Jet2 operator*(Complex c, Jet2 a) { return a *= c; }
  friend Jet2 operator/(const Jet2& a, const Jet2& b);
  friend Jet2 operator/(Jet2 a, Complex c) { return a *= (Complex{1.0} / c); }

  /// Applies a scalar function given its value and first two derivatives at
  /// the jet's value (chain rule, truncated at order 2).
  Jet2 compose(Complex f0, Complex f1, Complex f2) const;

private:
  std::size_t hess_index(std::size_t a, std::size_t b) const noexcept;
  void check_compatible(const Jet2& other) const;
  void clear_above_order();

  std::size_t nvars_ = 0;
  int order_ = kMaxOrder;
  std::vector<Complex> data_;
};

/// Multiplicative inverse; throws NearSingular when |value| <= singular_tol.
Jet2 inv(const Jet2& a, double singular_tol = Jet2::kDefaultSingularTol);
/// Principal square root; throws BranchCut unless Re(value) > 0.
Jet2 sqrt(const Jet2& a);

/// Max-abs distance over valid components of both operands.
double distance(const Jet2& a, const Jet2& b);

} // namespace akl
