#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akl/sampling.hpp"

using namespace akl;

TEST_CASE("Halton points are reproducible and inside the box") {
  const std::vector<Interval> box{{-0.5, 0.5}, {0.0, 2.0}, {1.0, 1.5}};
  const auto a = halton_points(box, 64, 42);
  const auto b = halton_points(box, 64, 42);
  const auto c = halton_points(box, 64, 43);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& p : a)
    for (std::size_t d = 0; d < box.size(); ++d) {
      CHECK(p[d] >= box[d].lo);
      CHECK(p[d] <= box[d].hi);
    }
}

TEST_CASE("Halton points fill the box evenly") {
  const std::vector<Interval> box{{0.0, 1.0}, {0.0, 1.0}};
  const auto pts = halton_points(box, 400, 7);
  int quadrant[4] = {0, 0, 0, 0};
  for (const auto& p : pts) ++quadrant[(p[0] < 0.5 ? 0 : 1) + (p[1] < 0.5 ? 0 : 2)];
  for (int q : quadrant) CHECK(std::abs(q - 100) <= 10);
}

TEST_CASE("random streams are independent of evaluation order") {
  CHECK(stream_seed(42, "a", 3) == stream_seed(42, "a", 3));
  CHECK(stream_seed(42, "a", 3) != stream_seed(42, "b", 3));
  CHECK(stream_seed(42, "a", 3) != stream_seed(42, "a", 4));
  Rng r1(stream_seed(1, "x", 0)), r2(stream_seed(1, "x", 0));
  CHECK((random_complex_vector(4, r1) - random_complex_vector(4, r2)).norm() == 0.0);
}

TEST_CASE("random fields have degree two") {
  Rng rng(5);
  const PolyVectorField f = random_field({0.1, 0.2}, rng);
  CHECK(f.dim() == 2);
  CHECK(f.degree() == 2);
  CHECK(random_real_vector(3, rng).imag().norm() == 0.0);
}
