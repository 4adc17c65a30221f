#include <doctest.h>

#include <cmath>

#include "frac/errors.hpp"
#include "frac/specfun.hpp"
#include "support/oracles.hpp"

using frac::DomainError;
namespace sf = frac::specfun;

namespace {
double rel_err(double got, double want) {
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
} // namespace

TEST_CASE("gamma at integer and half-integer points") {
  CHECK(rel_err(sf::gamma(1.0), 1.0) < 1e-14);
  CHECK(rel_err(sf::gamma(4.0), 6.0) < 1e-13);
  CHECK(rel_err(sf::gamma(0.5), std::sqrt(M_PI)) < 1e-13);
}

TEST_CASE("gamma against the defining-integral oracle") {
  for (double x : {0.05, 0.3, 1.7, 2.5, 7.0, 14.5}) {
    CAPTURE(x);
    CHECK(rel_err(sf::gamma(x), testsupport::gamma_oracle(x)) < 1e-12);
  }
}

TEST_CASE("gamma poles throw") {
  CHECK_THROWS_AS(sf::gamma(0.0), DomainError);
  CHECK_THROWS_AS(sf::gamma(-1.0), DomainError);
  CHECK_THROWS_AS(sf::gamma(-7.0), DomainError);
}

TEST_CASE("gamma reflection handles negative non-integers") {
  // Gamma(-0.5) = -2 sqrt(pi)
  CHECK(rel_err(sf::gamma(-0.5), -2.0 * std::sqrt(M_PI)) < 1e-13);
}

TEST_CASE("gamma recurrence x*Gamma(x) = Gamma(x+1) on [0.1, 20]") {
  for (int i = 0; i <= 199; ++i) {
    const double x = 0.1 + (20.0 - 0.1) * i / 199.0;
    CAPTURE(x);
    CHECK(rel_err(x * sf::gamma(x), sf::gamma(x + 1.0)) < 1e-12);
  }
}

TEST_CASE("mittag_leffler basic values") {
  CHECK(rel_err(sf::mittag_leffler(1.0, 1.0), std::exp(1.0)) < 1e-13);
  CHECK(sf::mittag_leffler(0.7, 0.0) == 1.0);
}

TEST_CASE("mittag_leffler at (1/2, -1) against series and erfc identity") {
  const double got = sf::mittag_leffler(0.5, -1.0);
  CHECK(rel_err(got, testsupport::mittag_leffler_series_oracle(0.5, -1.0)) < 1e-12);
  // E_{1/2}(-x) = e^{x^2} erfc(x)
  CHECK(rel_err(got, std::exp(1.0) * testsupport::erfc_oracle(1.0)) < 1e-10);
  CHECK(got == doctest::Approx(0.42758357615580700).epsilon(1e-10));
}

TEST_CASE("mittag_leffler domain errors") {
  CHECK_THROWS_AS(sf::mittag_leffler(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(sf::mittag_leffler(-0.3, 1.0), DomainError);
  CHECK_THROWS_AS(sf::mittag_leffler(1.2, 1.0), DomainError);
}

TEST_CASE("E_1 equals the exponential on [-5,5]") {
  for (int i = 0; i <= 100; ++i) {
    const double z = -5.0 + 0.1 * i;
    CAPTURE(z);
    CHECK(rel_err(sf::mittag_leffler(1.0, z), std::exp(z)) < 1e-10);
  }
}

TEST_CASE("E_{1/2}(-x) = e^{x^2} erfc(x) on [0,3]") {
  for (int i = 0; i <= 30; ++i) {
    const double x = 0.1 * i;
    CAPTURE(x);
    const double want = std::exp(x * x) * sf::erfc(x);
    CHECK(rel_err(sf::mittag_leffler(0.5, -x), want) < 1e-9);
  }
}

TEST_CASE("mittag_leffler far negative arguments") {
  // reference values: the defining series summed at high precision
  struct Case {
    double alpha, z, want;
  };
  const Case cases[] = {
      {0.3, -2.0, 0.29023222616787535504},
      {0.05, -0.5, 0.66037435858918413824},
      {0.9, -3.5, 0.063854273735752430249},
      {0.99, -4.0, 0.021827786633989432737},
      {0.7, -8.0, 0.046069992385362385726},
      {0.95, -15.0, 0.0039444851648296799484},
      {0.5, -25.0, 0.022549572432641358944},
      {0.5, -30.0, 0.018795888861416751497},
  };
  for (const auto& c : cases) {
    CAPTURE(c.alpha);
    CAPTURE(c.z);
    CHECK(rel_err(sf::mittag_leffler(c.alpha, c.z), c.want) < 1e-10);
  }
}

TEST_CASE("mittag_leffler positive arguments stay on the series") {
  for (double z : {0.5, 2.0, 10.0, 30.0}) {
    CAPTURE(z);
    CHECK(rel_err(sf::mittag_leffler(1.0, z), std::exp(z)) < 1e-12);
  }
  CHECK(rel_err(sf::mittag_leffler(0.5, 4.0),
                testsupport::mittag_leffler_series_oracle(0.5, 4.0)) < 1e-12);
}

TEST_CASE("erfc basic values and reflection") {
  CHECK(sf::erfc(0.0) == 1.0);
  CHECK(std::fabs(sf::erfc(0.3) - (2.0 - sf::erfc(-0.3))) < 1e-15);
  for (int i = 0; i <= 40; ++i) {
    const double z = -4.0 + 0.2 * i;
    CAPTURE(z);
    CHECK(std::fabs(sf::erfc(z) + sf::erfc(-z) - 2.0) < 1e-13);
  }
}

TEST_CASE("erfc against the quadrature oracle") {
  CHECK(rel_err(sf::erfc(1.0), testsupport::erfc_oracle(1.0)) < 1e-10);
  CHECK(sf::erfc(1.0) == doctest::Approx(0.15729920705028513).epsilon(1e-10));
  for (double z : {0.2, 0.9, 1.9, 2.1, 3.5, 5.0, 6.0}) {
    CAPTURE(z);
    CHECK(rel_err(sf::erfc(z), testsupport::erfc_oracle(z)) < 1e-10);
  }
}
