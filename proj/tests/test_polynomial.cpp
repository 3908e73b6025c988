#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akl/error.hpp"
#include "akl/polynomial.hpp"
#include "akl/sampling.hpp"
#include "oracles.hpp"

using namespace akl;

TEST_CASE("jet of a polynomial matches finite differences") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_polynomial(3, 4, rng);
    const Point x{0.2, -0.3, 0.1};
    const Jet2 j = p.jet(x);
    const oracle::ScalarFn f = [&](const Point& y) { return p.evaluate(y); };
    CHECK(std::abs(j.value() - p.evaluate(x)) < 1e-13);
    for (std::size_t a = 0; a < 3; ++a) {
      CHECK(std::abs(j.grad(a) - oracle::fd_partial(f, x, a)) < 1e-7);
      CHECK(std::abs(j.grad(a) - p.derivative(a).evaluate(x)) < 1e-12);
      for (std::size_t b = 0; b < 3; ++b)
        CHECK(std::abs(j.hess(a, b) - p.derivative(a).derivative(b).evaluate(x)) < 1e-12);
    }
  }
}

TEST_CASE("from_jet reproduces the 2-jet at the origin") {
  Rng rng(32);
  const Polynomial p = random_polynomial(4, 4, rng);
  const Point origin(4, 0.0);
  const Polynomial q = Polynomial::from_jet(p.jet(origin));
  CHECK(q.degree() <= 2);
  CHECK(distance(q.jet(origin), p.jet(origin)) < 1e-13);
  const Polynomial r = p.truncated(2);
  CHECK(distance(r.jet(origin), q.jet(origin)) < 1e-13);
}

TEST_CASE("arithmetic and term bookkeeping") {
  const Polynomial x = Polynomial::linear(2, 0);
  const Polynomial y = Polynomial::linear(2, 1);
  const Polynomial p = (x + y) * (x - y);
  CHECK(p.degree() == 2);
  CHECK(p.terms().size() == 2);
  CHECK(std::abs(p.evaluate({0.5, 0.25}) - Complex(0.1875)) < 1e-15);
  CHECK((p - p).is_zero());
  CHECK(p.conj().evaluate({1.0, 0.0}) == Complex(1.0));
  CHECK_THROWS_AS(Polynomial(2).add_term({1}, 1.0), Error);
  CHECK_THROWS_AS(Polynomial(2).add_term({-1, 0}, 1.0), Error);
  CHECK_THROWS_AS(p.evaluate({1.0}), Error);
}

TEST_CASE("vector field germs use shifted coordinates") {
  PolyVectorField f{{1.0, 2.0}, {Polynomial::linear(2, 0), Polynomial::constant(2, 3.0)}};
  const JetVec g = f.germ({1.5, 2.0});
  CHECK(g[0].value() == Complex(0.5));
  CHECK(g[0].grad(0) == Complex(1.0));
  CHECK(g[1].value() == Complex(3.0));
  CHECK(f.value({1.0, 2.0})(0) == Complex(0.0));
  CHECK(f.degree() == 1);
}
