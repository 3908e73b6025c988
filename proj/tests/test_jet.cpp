#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akl/error.hpp"
#include "akl/jet.hpp"
#include "akl/sampling.hpp"
#include "jet_composition.hpp"
#include "oracles.hpp"

using namespace akl;

namespace {

Jet2 random_jet(std::size_t n, Rng& rng) {
  std::normal_distribution<double> normal;
  Jet2 j(n, Complex(normal(rng), normal(rng)));
  for (std::size_t a = 0; a < n; ++a) {
    j.set_grad(a, Complex(normal(rng), normal(rng)));
    for (std::size_t b = a; b < n; ++b) j.set_hess(a, b, Complex(normal(rng), normal(rng)));
  }
  return j;
}

} // namespace

TEST_CASE("variable and constant jets") {
  const Jet2 x = Jet2::variable(3, 1, 0.25);
  CHECK(x.value() == Complex(0.25));
  CHECK(x.grad(1) == Complex(1.0));
  CHECK(x.grad(0) == Complex(0.0));
  CHECK(x.hess(1, 1) == Complex(0.0));
  const Jet2 c = Jet2::constant(3, Complex(2.0, -1.0));
  CHECK(c.max_abs() == doctest::Approx(std::abs(Complex(2.0, -1.0))));
  CHECK_THROWS_AS(Jet2::variable(3, 3, 0.0), Error);
}

TEST_CASE("product rule on coordinate monomials") {
  const Jet2 x = Jet2::variable(2, 0, 0.5);
  const Jet2 y = Jet2::variable(2, 1, -2.0);
  const Jet2 f = x * x * y;
  CHECK(f.value().real() == doctest::Approx(-0.5));
  CHECK(f.grad(0).real() == doctest::Approx(-2.0));
  CHECK(f.grad(1).real() == doctest::Approx(0.25));
  CHECK(f.hess(0, 0).real() == doctest::Approx(-4.0));
  CHECK(f.hess(0, 1).real() == doctest::Approx(1.0));
  CHECK(f.hess(1, 0).real() == doctest::Approx(1.0));
  CHECK(f.hess(1, 1).real() == doctest::Approx(0.0));
}

TEST_CASE("ring axioms hold on random jets") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Jet2 a = random_jet(3, rng), b = random_jet(3, rng), c = random_jet(3, rng);
    CHECK(distance(a + b, b + a) < 1e-12);
    CHECK(distance(a * b, b * a) < 1e-12);
    CHECK(distance((a * b) * c, a * (b * c)) < 1e-10);
    CHECK(distance(a * (b + c), a * b + a * c) < 1e-10);
    CHECK(distance(a - a, Jet2(3)) < 1e-14);
    CHECK(distance(a * Jet2::constant(3, 1.0), a) < 1e-14);
  }
}

TEST_CASE("inverse and square root satisfy their defining equations") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    Jet2 a = random_jet(4, rng);
    a.set_value(Complex(2.0 + std::abs(a.value().real()), a.value().imag()));
    CHECK(distance(a * inv(a), Jet2::constant(4, 1.0)) < 1e-10);
    const Jet2 r = sqrt(a);
    CHECK(distance(r * r, a) < 1e-10);
    CHECK(r.value().real() > 0.0);
  }
}

TEST_CASE("singular inverse and branch cut are reported") {
  Jet2 a(2, Complex(1e-14, 0.0));
  CHECK_THROWS_AS(inv(a), Error);
  try {
    inv(a);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NearSingular);
  }
  Jet2 b(2, Complex(-1.0, 0.0));
  try {
    sqrt(b);
    FAIL("expected BranchCut");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BranchCut);
  }
}

TEST_CASE("derivative lowers the order and clears stale components") {
  const Jet2 x = Jet2::variable(2, 0, 0.3);
  const Jet2 f = x * x * x;
  const Jet2 d = f.derivative(0);
  CHECK(d.order() == 1);
  CHECK(d.value().real() == doctest::Approx(3 * 0.09));
  CHECK(d.grad(0).real() == doctest::Approx(6 * 0.3));
  CHECK(d.hess(0, 0) == Complex(0.0));
  const Jet2 dd = d.derivative(0);
  CHECK(dd.order() == 0);
  CHECK(dd.grad(0) == Complex(0.0));
  CHECK_THROWS_AS(dd.derivative(0), Error);
  // Mixed-order arithmetic keeps the lower order.
  const Jet2 mixed = f + d;
  CHECK(mixed.order() == 1);
  CHECK(mixed.hess(0, 0) == Complex(0.0));
  Jet2 acc = f;
  acc += dd;
  CHECK(acc.order() == 0);
  CHECK(acc.grad(0) == Complex(0.0));
}

TEST_CASE("mismatched variable counts are rejected") {
  CHECK_THROWS_AS(Jet2(2) + Jet2(3), Error);
  CHECK_THROWS_AS(Jet2(2) * Jet2(3), Error);
}

TEST_CASE("composed functions match central differences") {
  Rng rng(13);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = testing::ComposedFunction::random(rng);
    Point x(4);
    for (auto& v : x) v = coord(rng);
    const Jet2 j = f.jet(x);
    const oracle::ScalarFn fn = [&](const Point& p) { return f.at(p); };
    CHECK(std::abs(j.value() - f.at(x)) < 1e-12);
    for (std::size_t a = 0; a < 4; ++a) {
      const Complex fd = oracle::fd_partial(fn, x, a);
      CHECK(std::abs(j.grad(a) - fd) / std::max(1.0, std::abs(fd)) < 1e-6);
      for (std::size_t b = 0; b < 4; ++b) {
        const Complex fd2 = oracle::fd_second(fn, x, a, b);
        CHECK(std::abs(j.hess(a, b) - fd2) / std::max(1.0, std::abs(fd2)) < 1e-6);
      }
    }
  }
}

TEST_CASE("conjugation and truncation") {
  Rng rng(14);
  const Jet2 a = random_jet(2, rng);
  const Jet2 c = a.conj();
  CHECK(c.grad(1) == std::conj(a.grad(1)));
  const Jet2 t = a.truncated(1);
  CHECK(t.order() == 1);
  CHECK(t.hess(0, 1) == Complex(0.0));
  CHECK(t.grad(1) == a.grad(1));
}
