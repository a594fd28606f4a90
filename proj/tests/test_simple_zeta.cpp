#include <doctest.h>

#include <lunezeta/simple_zeta.hpp>
#include <lunezeta/specfun.hpp>

#include <cmath>

using namespace lunezeta;
using specfun::Constants;

TEST_CASE("series values") {
  CHECK(z_value({0.0, 2.0, 0.0, 0.0}, 1.0).value == doctest::Approx(Constants::zeta2).epsilon(1e-15));
  CHECK(std::abs(z_value({0.0, 2.0, 0.5, -0.25}, 2.0).value - 0.2898681336964528729448) < 1e-14);
  CHECK(std::abs(z_value({1.0, 2.0, 1.0, -1.0}, 3.0).value - 0.0817642257898985713499) < 1e-14);
}

TEST_CASE("binomial continuation agrees with the series above the abscissa") {
  for (SimpleZetaParams p : {SimpleZetaParams{0.0, 2.0, 0.5, -0.25}, SimpleZetaParams{1.0, 2.0, 1.0, -1.0},
                             SimpleZetaParams{2.0, 2.0, 1.5, -2.25}}) {
    const double s = p.convergence_abscissa() + 0.5;
    CHECK(std::abs(z_value(p, s).value - z_continuation(p, s).value) < 1e-10);
  }
}

TEST_CASE("zeta(0) of the simple parts") {
  CHECK(z_zeta0({0.0, 2.0, 0.5, -0.25}).value == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(z_zeta0({0.0, 2.0, 0.3, 0.0}).value == doctest::Approx(-0.8).epsilon(1e-14));
  // The dim-3 simple part: zeta_H(-1, 2) + 1/2 = -7/12, which together with
  // 2 Z(0;1,a,0,-1) = -5/12 gives zeta(0, S^3) = -1.
  CHECK(z_zeta0({1.0, 2.0, 1.0, -1.0}).value == doctest::Approx(-7.0 / 12.0).epsilon(1e-13));
}

TEST_CASE("zeta'(0) of the simple parts") {
  CHECK(z_zeta0_prime({0.0, 2.0, 0.5, -0.25}).value == doctest::Approx(-Constants::log_2pi).epsilon(1e-13));
  const double zh = specfun::hurwitz_zeta_sderiv(-1, 2.0).value;
  CHECK(z_zeta0_prime({1.0, 2.0, 1.0, -1.0}).value ==
        doctest::Approx(2.0 * zh + Constants::log_2 - 1.0).epsilon(1e-12));
  for (SimpleZetaParams p : {SimpleZetaParams{0.0, 2.0, 0.5, 0.0}, SimpleZetaParams{1.0, 2.0, 1.0, 0.0},
                             SimpleZetaParams{2.0, 3.0, 0.25, 0.0}}) {
    const double want = p.beta * specfun::hurwitz_zeta_ds(-p.alpha, p.x + 1.0).value;
    CHECK(z_zeta0_prime(p).value == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("zeta'(0) is linear in small p") {
  const SimpleZetaParams base{1.0, 2.0, 1.0, 0.0};
  const double z0 = z_zeta0_prime(base).value;
  const double d1 = z_zeta0_prime({1.0, 2.0, 1.0, 1e-3}).value - z0;
  const double d2 = z_zeta0_prime({1.0, 2.0, 1.0, 2e-3}).value - z0;
  CHECK(d2 / d1 == doctest::Approx(2.0).epsilon(1e-2));
}

TEST_CASE("near the integer branch a pole approaches s = 0") {
  // For beta = 2 + d the pole at s = 2/beta - 1 =: e carries residue -e p / beta,
  // so zeta(0) jumps by p / beta and zeta'(0) grows like p / (beta e).
  const double p = -1.0;
  const double at = z_zeta0_prime({1.0, 2.0, 1.0, p}).value;
  const double z0 = z_zeta0({1.0, 2.0, 1.0, p}).value;
  for (double beta : {2.0 - 1e-5, 2.0 + 1e-5}) {
    const double e = 2.0 / beta - 1.0;
    CHECK(std::abs(z_zeta0({1.0, beta, 1.0, p}).value - (z0 + p / beta)) < 1e-4);
    CHECK(std::abs(z_zeta0_prime({1.0, beta, 1.0, p}).value - p / (beta * e) - at) < 1e-4);
  }
}

TEST_CASE("pole structure") {
  const auto p0 = z_poles({0.0, 2.0, 0.5, 0.0});
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].location == doctest::Approx(0.5));
  CHECK(p0[0].residue == doctest::Approx(0.5));
  const auto p1 = z_poles({1.0, 2.0, 1.0, 0.0});
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].location == doctest::Approx(1.0));
  CHECK(p1[0].residue == doctest::Approx(0.5));
  for (const SimplePole& p : z_poles({0.0, 2.0, 0.5, -0.25})) {
    const bool nonpositive_integer = p.location <= 0.0 && p.location == std::round(p.location);
    CHECK_FALSE(nonpositive_integer);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(z_value({-1.0, 2.0, 0.0, 0.0}, 3.0), DomainError);
  CHECK_THROWS_AS(z_value({0.0, 0.0, 0.0, 0.0}, 3.0), DomainError);
  CHECK_THROWS_AS(z_value({0.0, 2.0, -1.0, 0.0}, 3.0), DomainError);
  CHECK_THROWS_AS(z_value({0.0, 2.0, 0.0, -1.0}, 3.0), DomainError);
}
