#pragma once

#include "akl/jet.hpp"
#include "akl/sampling.hpp"

#include <vector>

namespace akl::testing {

inline Complex inv_of(Complex z) { return 1.0 / z; }
inline Jet2 inv_of(const Jet2& z) { return inv(z); }
inline Complex sqrt_of(Complex z) { return std::sqrt(z); }
inline Jet2 sqrt_of(const Jet2& z) { return sqrt(z); }

/// Random cubic in 4 variables composed with products, inverses and square
/// roots; the constants keep arguments away from zero and the branch cut on
/// the unit box.
struct ComposedFunction {
  std::vector<std::pair<Exponents, Complex>> p;
  std::vector<std::pair<Exponents, Complex>> q;

  static ComposedFunction random(Rng& rng) {
    ComposedFunction f;
    std::uniform_real_distribution<double> coeff(-0.2, 0.2);
    std::uniform_int_distribution<int> power(0, 2);
    for (int k = 0; k < 6; ++k) {
      Exponents e(4);
      for (auto& x : e) x = power(rng);
      f.p.push_back({e, Complex(coeff(rng), coeff(rng))});
      for (auto& x : e) x = power(rng);
      f.q.push_back({e, Complex(coeff(rng), coeff(rng))});
    }
    return f;
  }

  template <class T, class Var>
  static T poly(const std::vector<std::pair<Exponents, Complex>>& terms, const Var& var,
                const T& one) {
    T acc = one * Complex{0.0};
    for (const auto& [e, c] : terms) {
      T m = one * c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * var(i);
      acc = acc + m;
    }
    return acc;
  }

  template <class T, class Var>
  T evaluate(const Var& var, const T& one) const {
    const T a = poly(p, var, one);
    const T b = poly(q, var, one);
    return a * b + inv_of(one * Complex(3.0) + a) - sqrt_of(one * Complex(2.0) + b * b) * a +
           a / (one * Complex(2.5) - b);
  }

  Complex at(const Point& x) const {
    return evaluate([&](std::size_t i) { return Complex(x[i]); }, Complex(1.0));
  }
  Jet2 jet(const Point& x) const {
    return evaluate([&](std::size_t i) { return Jet2::variable(x.size(), i, x[i]); },
                    Jet2::constant(x.size(), 1.0));
  }
};

} // namespace akl::testing
