#pragma once

#include "akl/geometry.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace akl {

/// Halton points in the box with a seed-derived Cranley-Patterson shift, so
/// the sequence is low-discrepancy and reproducible for a fixed seed.
std::vector<Point> halton_points(const std::vector<Interval>& box, std::size_t count,
                                 std::uint64_t seed);
std::vector<Point> sample_points(const ChartedStructure& chart, std::size_t count,
                                 std::uint64_t seed);

/// Seed for an independent random stream identified by (seed, label, index).
std::uint64_t stream_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

using Rng = std::mt19937_64;

/// Entries with independent standard normal real and imaginary parts.
CVec random_complex_vector(std::size_t dim, Rng& rng);
CVec random_real_vector(std::size_t dim, Rng& rng);
/// Polynomial of total degree <= max_degree with standard normal complex coefficients.
Polynomial random_polynomial(std::size_t nvars, int max_degree, Rng& rng);
/// Field with random degree-2 polynomial components in t = x - origin.
PolyVectorField random_field(const Point& origin, Rng& rng);

} // namespace akl
