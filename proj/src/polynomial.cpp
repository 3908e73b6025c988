#include "akl/polynomial.hpp"

#include "akl/error.hpp"

#include <algorithm>
#include <numeric>

namespace akl {

namespace {

double monomial_value(const Exponents& e, const Point& x) {
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) return 0.0;
    for (int k = 0; k < e[i]; ++k) v *= x[i];
  }
  return v;
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

Polynomial Polynomial::constant(std::size_t nvars, Complex c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Exponents exponents, Complex coeff) {
  Polynomial p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

Polynomial Polynomial::linear(std::size_t nvars, std::size_t index, Complex c) {
  if (index >= nvars) throw Error(ErrorKind::IndexOutOfRange, "linear polynomial variable");
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(e, c);
}

int Polynomial::degree() const noexcept {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Polynomial::add_term(const Exponents& exponents, Complex coeff) {
  if (exponents.size() != nvars_)
    throw Error(ErrorKind::ShapeMismatch, "monomial has " + std::to_string(exponents.size()) +
                                              " exponents, polynomial has " +
                                              std::to_string(nvars_) + " vars");
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 0; }))
    throw Error(ErrorKind::MalformedDescriptor, "negative exponent");
  if (coeff == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

Complex Polynomial::evaluate(const Point& x) const {
  if (x.size() != nvars_) throw Error(ErrorKind::ShapeMismatch, "polynomial evaluation point");
  Complex v{};
  for (const auto& [e, c] : terms_) v += c * monomial_value(e, x);
  return v;
}

Jet2 Polynomial::jet(const Point& x) const {
  if (x.size() != nvars_) throw Error(ErrorKind::ShapeMismatch, "polynomial evaluation point");
  Jet2 j(nvars_);
  Complex value{};
  std::vector<Complex> grad(nvars_);
  std::vector<Complex> hess(nvars_ * nvars_);
  Exponents e1;
  Exponents e2;
  for (const auto& [e, c] : terms_) {
    value += c * monomial_value(e, x);
    for (std::size_t a = 0; a < nvars_; ++a) {
      if (e[a] == 0) continue;
      e1 = e;
      e1[a] -= 1;
      grad[a] += c * static_cast<double>(e[a]) * monomial_value(e1, x);
      for (std::size_t b = a; b < nvars_; ++b) {
        if (e1[b] == 0) continue;
        e2 = e1;
        e2[b] -= 1;
        hess[a * nvars_ + b] += c * static_cast<double>(e[a] * e1[b]) * monomial_value(e2, x);
      }
    }
  }
  j.set_value(value);
  for (std::size_t a = 0; a < nvars_; ++a) {
    j.set_grad(a, grad[a]);
    for (std::size_t b = a; b < nvars_; ++b) j.set_hess(a, b, hess[a * nvars_ + b]);
  }
  return j;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw Error(ErrorKind::IndexOutOfRange, "polynomial derivative variable");
  Polynomial d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents e1 = e;
    e1[var] -= 1;
    d.add_term(e1, c * static_cast<double>(e[var]));
  }
  return d;
}

Polynomial Polynomial::conj() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = std::conj(c);
  return p;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial p(nvars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= max_degree) p.terms_.emplace(e, c);
  return p;
}

void Polynomial::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw Error(ErrorKind::ShapeMismatch, "polynomial addition");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw Error(ErrorKind::ShapeMismatch, "polynomial subtraction");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  for (auto& [e, v] : terms_) v *= c;
  prune();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::ShapeMismatch, "polynomial product");
  Polynomial r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::from_jet(const Jet2& j) {
  const std::size_t n = j.nvars();
  Polynomial p(n);
  Exponents e(n, 0);
  p.add_term(e, j.value());
  for (std::size_t a = 0; a < n; ++a) {
    e.assign(n, 0);
    e[a] = 1;
    p.add_term(e, j.grad(a));
    for (std::size_t b = a; b < n; ++b) {
      e.assign(n, 0);
      e[a] += 1;
      e[b] += 1;
      p.add_term(e, a == b ? 0.5 * j.hess(a, a) : j.hess(a, b));
    }
  }
  return p;
}

int PolyVectorField::degree() const noexcept {
  int d = 0;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

JetVec PolyVectorField::germ(const Point& x) const {
  if (x.size() != origin.size()) throw Error(ErrorKind::ShapeMismatch, "field evaluation point");
  Point t(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) t[i] = x[i] - origin[i];
  JetVec g;
  g.reserve(components.size());
  for (const auto& c : components) g.push_back(c.jet(t));
  return g;
}

CVec PolyVectorField::value(const Point& x) const {
  Point t(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) t[i] = x[i] - origin[i];
  CVec v(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) v(i) = components[i].evaluate(t);
  return v;
}

PolyVectorField PolyVectorField::conj() const {
  PolyVectorField f{origin, {}};
  for (const auto& c : components) f.components.push_back(c.conj());
  return f;
}

} // namespace akl
