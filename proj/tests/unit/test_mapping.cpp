#include <doctest.h>

#include <cmath>

#include "../support/oracles.hpp"
#include "cavity/grid.hpp"
#include "cavity/mapping.hpp"

using namespace cavity;

TEST_CASE("endpoints land exactly on the domain boundaries") {
  const RadialMapping m(1.0, 10.0);
  CHECK(m.radius(-1.0) == 0.0);
  CHECK(m.radius(1.0) == 10.0);
  const RadialMapping thirds(10.0 / 3.0, 10.0);
  CHECK(thirds.radius(-1.0) == 0.0);
  CHECK(thirds.radius(1.0) == 10.0);
}

TEST_CASE("midpoint value and jacobian match the closed form") {
  const RadialMapping m(1.0, 10.0);
  CHECK(m.radius(0.0) == doctest::Approx(1.0 / 1.2).epsilon(1e-15));
  CHECK(m.jacobian(0.0) == doctest::Approx(2.2 / 1.44).epsilon(1e-15));
}

TEST_CASE("mapping is strictly increasing with positive jacobian") {
  const RadialMapping m(3.0, 7.5);
  const SpectralGrid g = lobatto_grid(64);
  double prev = -1.0;
  for (int j = 0; j <= 64; ++j) {
    CHECK(m.jacobian(g.nodes[j]) > 0.0);
    if (j > 0) CHECK(m.radius(g.nodes[j]) > prev);
    prev = m.radius(g.nodes[j]);
  }
}

TEST_CASE("jacobian agrees with a centered difference") {
  const RadialMapping m(1.0, 10.0);
  for (double x : {-0.9, -0.5, 0.0, 0.3, 0.8}) {
    const double fd = test_oracles::central_difference([&m](double t) { return m.radius(t); }, x, 1e-6);
    CHECK(m.jacobian(x) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("quadrature of the jacobian recovers the domain length") {
  const RadialMapping m(1.0, 10.0);
  const SpectralGrid g = lobatto_grid(64);
  long double sum = 0.0L;
  for (int j = 0; j <= 64; ++j) sum += g.weights[j] * m.jacobian(g.nodes[j]);
  CHECK(std::abs(static_cast<double>(sum) - 10.0) <= 1e-10);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(RadialMapping(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialMapping(1.0, -2.0), std::invalid_argument);
}
