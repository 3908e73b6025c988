#include "akl/jet.hpp"

#include "akl/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace akl {

namespace {

std::size_t storage_size(std::size_t n) { return 1 + n + n * (n + 1) / 2; }

} // namespace

Jet2::Jet2(std::size_t nvars, Complex value, int order)
    : nvars_(nvars), order_(order), data_(storage_size(nvars)) {
  if (order < 0 || order > kMaxOrder)
    throw Error(ErrorKind::InvalidOrder, "jet order " + std::to_string(order));
  data_[0] = value;
}

Jet2 Jet2::variable(std::size_t nvars, std::size_t index, double point_value) {
  if (index >= nvars)
    throw Error(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(index) +
                                                " with " + std::to_string(nvars) + " vars");
  Jet2 j(nvars, point_value);
  j.data_[1 + index] = 1.0;
  return j;
}

std::size_t Jet2::hess_index(std::size_t a, std::size_t b) const noexcept {
  if (a > b) std::swap(a, b);
  // packed upper triangle, row a starts after sum_{k<a} (n - k) entries
  const std::size_t row_start = a * nvars_ - (a * (a + 1)) / 2 + a;
  return 1 + nvars_ + row_start + (b - a);
}

Complex Jet2::grad(std::size_t a) const {
  if (a >= nvars_) throw Error(ErrorKind::IndexOutOfRange, "grad index");
  return data_[1 + a];
}

Complex Jet2::hess(std::size_t a, std::size_t b) const {
  if (a >= nvars_ || b >= nvars_) throw Error(ErrorKind::IndexOutOfRange, "hess index");
  return data_[hess_index(a, b)];
}

void Jet2::set_value(Complex v) {
  if (data_.empty()) throw Error(ErrorKind::ShapeMismatch, "empty jet");
  data_[0] = v;
}

void Jet2::set_grad(std::size_t a, Complex v) {
  if (a >= nvars_) throw Error(ErrorKind::IndexOutOfRange, "grad index");
  if (order_ >= 1) data_[1 + a] = v;
}

void Jet2::set_hess(std::size_t a, std::size_t b, Complex v) {
  if (a >= nvars_ || b >= nvars_) throw Error(ErrorKind::IndexOutOfRange, "hess index");
  if (order_ >= 2) data_[hess_index(a, b)] = v;
}

void Jet2::clear_above_order() {
  if (order_ < 2) std::fill(data_.begin() + 1 + nvars_, data_.end(), Complex{});
  if (order_ < 1) std::fill(data_.begin() + 1, data_.begin() + 1 + nvars_, Complex{});
}

void Jet2::check_compatible(const Jet2& other) const {
  if (nvars_ != other.nvars_ || data_.empty() || other.data_.empty())
    throw Error(ErrorKind::ShapeMismatch, "jet nvars " + std::to_string(nvars_) + " vs " +
                                              std::to_string(other.nvars_));
}

Jet2 Jet2::derivative(std::size_t a) const {
  if (a >= nvars_) throw Error(ErrorKind::IndexOutOfRange, "derivative index");
  if (order_ < 1) throw Error(ErrorKind::InvalidOrder, "cannot differentiate an order-0 jet");
  Jet2 d(nvars_, data_[1 + a], order_ - 1);
  if (d.order_ >= 1)
    for (std::size_t b = 0; b < nvars_; ++b) d.data_[1 + b] = data_[hess_index(a, b)];
  return d;
}

Jet2 Jet2::truncated(int order) const {
  Jet2 t = *this;
  t.order_ = std::min(order_, std::max(order, 0));
  t.clear_above_order();
  return t;
}

Jet2 Jet2::conj() const {
  Jet2 c = *this;
  for (auto& v : c.data_) v = std::conj(v);
  return c;
}

double Jet2::max_abs() const noexcept {
  std::size_t end = order_ >= 2 ? data_.size() : order_ == 1 ? 1 + nvars_ : 1;
  double m = 0.0;
  for (std::size_t k = 0; k < std::min(end, data_.size()); ++k) m = std::max(m, std::abs(data_[k]));
  return m;
}

Jet2& Jet2::operator+=(const Jet2& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  order_ = std::min(order_, rhs.order_);
  clear_above_order();
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  order_ = std::min(order_, rhs.order_);
  clear_above_order();
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& rhs) { return *this = *this * rhs; }

Jet2& Jet2::operator+=(Complex c) {
  set_value(data_[0] + c);
  return *this;
}

Jet2& Jet2::operator-=(Complex c) {
  set_value(data_[0] - c);
  return *this;
}

Jet2& Jet2::operator*=(Complex c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Jet2 operator-(const Jet2& a) {
  Jet2 r = a;
  for (auto& v : r.data_) v = -v;
  return r;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  a.check_compatible(b);
  const std::size_t n = a.nvars_;
  Jet2 r(n, a.data_[0] * b.data_[0], std::min(a.order_, b.order_));
  if (r.order_ >= 1) {
    const Complex* ga = a.data_.data() + 1;
    const Complex* gb = b.data_.data() + 1;
    for (std::size_t i = 0; i < n; ++i) r.data_[1 + i] = a.data_[0] * gb[i] + b.data_[0] * ga[i];
    if (r.order_ >= 2) {
      std::size_t k = 1 + n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++k)
          r.data_[k] = a.data_[0] * b.data_[k] + b.data_[0] * a.data_[k] + ga[i] * gb[j] +
                       gb[i] * ga[j];
    }
  }
  return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inv(b); }

Jet2 Jet2::compose(Complex f0, Complex f1, Complex f2) const {
  Jet2 r(nvars_, f0, order_);
  if (order_ >= 1) {
    for (std::size_t i = 0; i < nvars_; ++i) r.data_[1 + i] = f1 * data_[1 + i];
    if (order_ >= 2) {
      std::size_t k = 1 + nvars_;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (std::size_t j = i; j < nvars_; ++j, ++k)
          r.data_[k] = f1 * data_[k] + f2 * data_[1 + i] * data_[1 + j];
    }
  }
  return r;
}

Jet2 inv(const Jet2& a, double singular_tol) {
  const Complex v = a.value();
  if (!(std::abs(v) > singular_tol))
    throw Error(ErrorKind::NearSingular, "jet value magnitude " + std::to_string(std::abs(v)));
  const Complex r = 1.0 / v;
  return a.compose(r, -r * r, 2.0 * r * r * r);
}

Jet2 sqrt(const Jet2& a) {
  const Complex v = a.value();
  if (!(v.real() > 0.0))
    throw Error(ErrorKind::BranchCut, "sqrt requires Re(value) > 0, got " +
                                          std::to_string(v.real()));
  const Complex s = std::sqrt(v);
  return a.compose(s, 0.5 / s, -0.25 / (s * s * s));
}

double distance(const Jet2& a, const Jet2& b) { return (a - b).truncated(std::min(a.order(), b.order())).max_abs(); }

} // namespace akl
