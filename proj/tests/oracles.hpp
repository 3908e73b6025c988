#pragma once

#include "akl/geometry.hpp"

#include <functional>

namespace akl::oracle {

using ScalarFn = std::function<Complex(const Point&)>;
using VectorFn = std::function<CVec(const Point&)>;
using MatrixFn = std::function<Eigen::MatrixXcd(const Point&)>;

inline Point shifted(Point x, std::size_t a, double h) {
  x[a] += h;
  return x;
}

inline Point moved(const Point& x, const CVec& dir, double h) {
  Point y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += h * dir(i).real();
  return y;
}

/// Central difference d_a f.
inline Complex fd_partial(const ScalarFn& f, const Point& x, std::size_t a, double h = 1e-5) {
  return (f(shifted(x, a, h)) - f(shifted(x, a, -h))) / (2.0 * h);
}

/// Central second difference d_a d_b f.
inline Complex fd_second(const ScalarFn& f, const Point& x, std::size_t a, std::size_t b,
                         double h = 1e-4) {
  if (a == b) return (f(shifted(x, a, h)) - 2.0 * f(x) + f(shifted(x, a, -h))) / (h * h);
  return (f(shifted(shifted(x, a, h), b, h)) - f(shifted(shifted(x, a, h), b, -h)) -
          f(shifted(shifted(x, a, -h), b, h)) + f(shifted(shifted(x, a, -h), b, -h))) /
         (4.0 * h * h);
}

inline Eigen::MatrixXcd fd_partial(const MatrixFn& f, const Point& x, std::size_t a,
                                   double h = 1e-5) {
  return (f(shifted(x, a, h)) - f(shifted(x, a, -h))) / (2.0 * h);
}

/// Directional derivative of a vector field along a real direction.
inline CVec fd_directional(const VectorFn& f, const Point& x, const CVec& dir, double h = 1e-5) {
  return (f(moved(x, dir, h)) - f(moved(x, dir, -h))) / (2.0 * h);
}

/// Lie bracket of real vector fields from first-order flow differences.
inline CVec fd_bracket(const VectorFn& u, const VectorFn& v, const Point& x, double h = 1e-5) {
  return fd_directional(v, x, u(x), h) - fd_directional(u, x, v(x), h);
}

/// Christoffel symbols from finite differences of the metric values.
inline std::vector<Complex> fd_christoffel(const MatrixFn& metric, const Point& x,
                                           double h = 1e-5) {
  const std::size_t dim = x.size();
  const Eigen::MatrixXcd g = metric(x);
  const Eigen::MatrixXcd g_inv = g.inverse();
  std::vector<Eigen::MatrixXcd> dg;
  for (std::size_t a = 0; a < dim; ++a) dg.push_back(fd_partial(metric, x, a, h));
  std::vector<Complex> gamma(dim * dim * dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        Complex acc{};
        for (std::size_t d = 0; d < dim; ++d)
          acc += g_inv(c, d) * (dg[a](b, d) + dg[b](a, d) - dg[d](a, b));
        gamma[(c * dim + a) * dim + b] = 0.5 * acc;
      }
  return gamma;
}

inline Eigen::MatrixXcd metric_value(const ChartedStructure& chart, const Point& x) {
  return (chart.j(x).transpose() * chart.kappa(x)).value();
}

/// (nabla_u V)(x) for a value-level field V, with FD derivatives and FD Christoffels.
inline CVec fd_covariant(const ChartedStructure& chart, const VectorFn& v, const Point& x,
                         const CVec& u, double h = 1e-5) {
  const std::size_t dim = x.size();
  const std::vector<Complex> gamma =
      fd_christoffel([&](const Point& p) { return metric_value(chart, p); }, x, h);
  CVec r = fd_directional(v, x, CVec(u.real().cast<Complex>()), h) +
           Complex(0.0, 1.0) * fd_directional(v, x, CVec(u.imag().cast<Complex>()), h);
  const CVec vx = v(x);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) r(c) += u(a) * gamma[(c * dim + a) * dim + b] * vx(b);
  return r;
}

} // namespace akl::oracle
