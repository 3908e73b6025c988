#include "akl/sampling.hpp"

#include "akl/error.hpp"

#include <array>
#include <cmath>

namespace akl {

namespace {

constexpr std::array<int, 16> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void add_monomials(Exponents& e, std::size_t var, int remaining, std::vector<Exponents>& out) {
  if (var == e.size()) {
    out.push_back(e);
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    e[var] = k;
    add_monomials(e, var + 1, remaining - k, out);
  }
  e[var] = 0;
}

} // namespace

std::vector<Point> halton_points(const std::vector<Interval>& box, std::size_t count,
                                 std::uint64_t seed) {
  if (box.size() > kPrimes.size())
    throw Error(ErrorKind::ShapeMismatch, "too many dimensions for the Halton sequence");
  Rng rng(splitmix64(seed));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> shift(box.size());
  for (auto& s : shift) s = uniform(rng);
  std::vector<Point> points;
  points.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Point p(box.size());
    for (std::size_t d = 0; d < box.size(); ++d) {
      double u = radical_inverse(k + 1, kPrimes[d]) + shift[d];
      u -= std::floor(u);
      p[d] = box[d].lo + u * (box[d].hi - box[d].lo);
    }
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<Point> sample_points(const ChartedStructure& chart, std::size_t count,
                                 std::uint64_t seed) {
  return halton_points(chart.domain(), count, seed);
}

std::uint64_t stream_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ fnv1a(label)) + index);
}

CVec random_complex_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal;
  CVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = normal(rng);
    v(i) = Complex(re, normal(rng));
  }
  return v;
}

CVec random_real_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal;
  CVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v(i) = normal(rng);
  return v;
}

Polynomial random_polynomial(std::size_t nvars, int max_degree, Rng& rng) {
  std::normal_distribution<double> normal;
  std::vector<Exponents> monomials;
  Exponents e(nvars, 0);
  add_monomials(e, 0, max_degree, monomials);
  Polynomial p(nvars);
  for (const auto& m : monomials) {
    const double re = normal(rng);
    p.add_term(m, Complex(re, normal(rng)));
  }
  return p;
}

PolyVectorField random_field(const Point& origin, Rng& rng) {
  PolyVectorField f{origin, {}};
  for (std::size_t i = 0; i < origin.size(); ++i)
    f.components.push_back(random_polynomial(origin.size(), 2, rng));
  return f;
}

} // namespace akl
