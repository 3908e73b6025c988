#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "akl/error.hpp"
#include "akl/geometry.hpp"
#include "akl/manifolds.hpp"
#include "akl/sampling.hpp"
#include "oracles.hpp"

using namespace akl;

namespace {

const std::vector<std::string> kSymplectic{"flat_c1", "flat_c2", "kahler_potential_c1",
                                           "kahler_potential_c2", "perturbed_c2"};

double max_abs_vec(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

} // namespace

TEST_CASE("standard structures give the Euclidean metric") {
  for (int n : {1, 2, 3}) {
    const Eigen::MatrixXcd j = standard_j(n);
    const Eigen::MatrixXcd k = standard_kappa(n);
    CHECK((j * j + Eigen::MatrixXcd::Identity(2 * n, 2 * n)).norm() < 1e-15);
    CHECK((j.transpose() * k - Eigen::MatrixXcd::Identity(2 * n, 2 * n)).norm() < 1e-15);
  }
}

TEST_CASE("Christoffel symbols match finite differences of the metric") {
  for (const auto& name : {"kahler_potential_c2", "perturbed_c2", "nonclosed_control_c2"}) {
    const ChartedStructure chart = builtin(name);
    for (const auto& p : sample_points(chart, 5, 1)) {
      const ConnectionData conn = christoffel(chart, p);
      const auto fd = oracle::fd_christoffel(
          [&](const Point& x) { return oracle::metric_value(chart, x); }, p);
      double err = 0.0;
      for (std::size_t k = 0; k < fd.size(); ++k)
        err = std::max(err, std::abs(conn.gamma[k].value() - fd[k]));
      CHECK(err < 1e-7);
    }
  }
}

TEST_CASE("Levi-Civita connection is metric compatible and torsion free") {
  for (const auto& name : kSymplectic) {
    const ChartedStructure chart = builtin(name);
    for (const auto& p : sample_points(chart, 5, 2)) {
      const LocalGeometry geo(chart, p);
      const std::size_t dim = geo.dim();
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
          for (std::size_t c = 0; c < dim; ++c) {
            Complex r = geo.g()(b, c).grad(a);
            for (std::size_t d = 0; d < dim; ++d)
              r -= geo.gamma(d, a, b).value() * geo.g()(d, c).value() +
                   geo.gamma(d, a, c).value() * geo.g()(b, d).value();
            CHECK(std::abs(r) < 1e-12);
            CHECK(std::abs(geo.gamma(c, a, b).value() - geo.gamma(c, b, a).value()) == 0.0);
          }
    }
  }
}

TEST_CASE("curvature symmetries and the first Bianchi identity") {
  Rng rng(41);
  for (const auto& name : kSymplectic) {
    const ChartedStructure chart = builtin(name);
    for (const auto& p : sample_points(chart, 5, 3)) {
      const LocalGeometry geo(chart, p);
      const CVec x = random_complex_vector(geo.dim(), rng), y = random_complex_vector(geo.dim(), rng),
                 z = random_complex_vector(geo.dim(), rng), w = random_complex_vector(geo.dim(), rng);
      const CVec bianchi = curvature(geo, x, y, z) + curvature(geo, y, z, x) + curvature(geo, z, x, y);
      CHECK(bianchi.cwiseAbs().maxCoeff() < 1e-12);
      CHECK((curvature(geo, x, y, z) + curvature(geo, y, x, z)).cwiseAbs().maxCoeff() < 1e-12);
      // g(R(X,Y)Z, W) = -g(R(X,Y)W, Z)
      CHECK(std::abs(geo.pairing(curvature(geo, x, y, z), w) + geo.pairing(curvature(geo, x, y, w), z)) <
            1e-11);
    }
  }
}

TEST_CASE("curvature equals the commutator of covariant derivatives on constant fields") {
  // For constant X, Y, Z: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z.
  Rng rng(42);
  const ChartedStructure chart = builtin("perturbed_c2");
  for (const auto& p : sample_points(chart, 5, 4)) {
    const LocalGeometry geo(chart, p);
    const CVec x = random_complex_vector(4, rng), y = random_complex_vector(4, rng),
               z = random_complex_vector(4, rng);
    const JetVec gx = geo.constant(x), gy = geo.constant(y), gz = geo.constant(z);
    const CVec lhs = values(covariant_derivative(geo, gx, covariant_derivative(geo, gy, gz)) -
                            covariant_derivative(geo, gy, covariant_derivative(geo, gx, gz)));
    CHECK((lhs - curvature(geo, x, y, z)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("covariant derivative matches a finite-difference oracle") {
  Rng rng(43);
  const ChartedStructure chart = builtin("perturbed_c2");
  for (const auto& p : sample_points(chart, 5, 5)) {
    const PolyVectorField v = random_field(p, rng);
    const CVec u = random_complex_vector(4, rng);
    const CVec jet_route = covariant_derivative_vec(chart, p, u, v);
    const CVec fd = oracle::fd_covariant(chart, [&](const Point& x) { return v.value(x); }, p, u);
    CHECK((jet_route - fd).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("exterior derivative of kappa") {
  const ChartedStructure closed = builtin("kahler_potential_c2");
  const ChartedStructure open = builtin("nonclosed_control_c2");
  double closed_max = 0.0, open_max = 0.0;
  for (const auto& p : sample_points(closed, 20, 6)) {
    closed_max = std::max(closed_max, max_abs_vec(exterior_derivative_2form(closed, p)));
    open_max = std::max(open_max, max_abs_vec(exterior_derivative_2form(open, p)));
  }
  CHECK(closed_max < 1e-12);
  CHECK(open_max > 1e-2);
  // dk is totally antisymmetric.
  const Point p{0.1, 0.2, 0.3, -0.1};
  const auto dk = exterior_derivative_2form(open, p);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        CHECK(std::abs(dk[(a * 4 + b) * 4 + c] + dk[(b * 4 + a) * 4 + c]) < 1e-14);
}

TEST_CASE("retraction produces a calibrated structure") {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXcd hv(4, 4);
    for (int i = 0; i < 4; ++i) hv.col(i) = random_real_vector(4, rng);
    hv = hv * hv.transpose() + Eigen::MatrixXcd::Identity(4, 4);
    Eigen::MatrixXcd kv(4, 4);
    for (int i = 0; i < 4; ++i) kv.col(i) = random_real_vector(4, rng);
    kv = kv - kv.transpose().eval();
    const JetMatrix k = JetMatrix::constant(kv, 1);
    const JetMatrix j = calibrated_j(k, JetMatrix::constant(hv, 1));
    const Eigen::MatrixXcd jv = j.value();
    CHECK((jv * jv + Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((jv.transpose() * kv * jv - kv).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::MatrixXd g = (jv.transpose() * kv).real();
    CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).eigenvalues().minCoeff() > 0.0);
  }
  // Retraction of the Euclidean metric recovers the standard structure.
  const JetMatrix j0 = calibrated_j(JetMatrix::constant(standard_kappa(2), 1),
                                    JetMatrix::identity(4, 1));
  CHECK((j0.value() - standard_j(2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("domain and provider checks") {
  const ChartedStructure chart = builtin("flat_c1");
  CHECK(chart.contains({0.0, 0.5}));
  CHECK_FALSE(chart.contains({0.0, 0.6}));
  try {
    chart.kappa({0.0, 0.6});
    FAIL("expected DomainViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainViolation);
  }
  const MatrixProvider bad = [](const Point&) { return JetMatrix(3, 3, 2); };
  const ChartedStructure broken("broken", 1, bad, bad, {{-1, 1}, {-1, 1}});
  CHECK_THROWS_AS(broken.j({0.0, 0.0}), Error);
  const MatrixProvider low = [](const Point&) {
    JetMatrix m = JetMatrix::constant(standard_j(1), 2);
    m(0, 0) = Jet2(2, 0.0, 1);
    return m;
  };
  const ChartedStructure low_order("low", 1, low, low, {{-1, 1}, {-1, 1}});
  try {
    low_order.j({0.0, 0.0});
    FAIL("expected InvalidOrder");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidOrder);
  }
}

TEST_CASE("structure residuals flag violated invariants") {
  const MatrixProvider kappa = [](const Point&) { return JetMatrix::constant(standard_kappa(1), 2); };
  const MatrixProvider not_calibrated = [](const Point&) {
    return JetMatrix::constant(-1.0 * standard_j(1), 2);
  };
  const ChartedStructure chart("flipped", 1, kappa, not_calibrated, {{-1, 1}, {-1, 1}});
  const StructureResiduals r = structure_residuals(chart, {0.0, 0.0});
  CHECK(r.metric_positivity > 1.0);
  const auto failing = r.failing(1e-9);
  REQUIRE(failing.size() == 1);
  CHECK(failing.front() == "metric_positive_definite");
  CHECK_THROWS_AS(LocalGeometry(chart, {0.0, 0.0}), Error);
}
