#include <doctest.h>

#include <lunezeta/closed_forms.hpp>
#include <lunezeta/oracle.hpp>
#include <lunezeta/spheres.hpp>

#include <cmath>
#include <numbers>

using namespace lunezeta;

TEST_CASE("shifted and squared closed forms agree") {
  for (int dim : {2, 3}) {
    for (double a : {1.0, 1.5, 2.0, std::numbers::e, std::numbers::pi, 5.0, 10.0}) {
      const RealResult A = closed_forms::zeta_prime_shift_form(dim, a);
      const RealResult B = closed_forms::zeta_prime_square_form(dim, a);
      CHECK(std::abs(A.value - B.value) < 1e-7);
    }
  }
}

TEST_CASE("closed forms reduce to round-sphere values at a = 1") {
  CHECK(closed_forms::zeta0(2, 1.0) == doctest::Approx(-2.0 / 3.0));
  CHECK(closed_forms::zeta0(3, 2.0) == -1.0);
  CHECK(closed_forms::zeta_prime_shift_form(2, 1.0).value == doctest::Approx(-1.161684574801).epsilon(1e-11));
  CHECK(closed_forms::zeta_prime_shift_form(3, 1.0).value == doctest::Approx(-1.205626799966).epsilon(1e-11));
}

TEST_CASE("analytic slope matches finite differences away from a = 1") {
  for (int dim : {2, 3}) {
    for (double a : {1.5, 3.0}) {
      const double fd = oracle::finite_difference_check(
                            [dim](double x) { return closed_forms::zeta_prime_shift_form(dim, x).value; }, a, 1e-3)
                            .derivative;
      CHECK(closed_forms::zeta_prime_slope(dim, a).value == doctest::Approx(fd).epsilon(1e-8));
    }
  }
}

TEST_CASE("closed forms reject other dimensions") {
  CHECK_THROWS_AS(closed_forms::zeta0(4, 1.0), DomainError);
  CHECK_THROWS_AS(closed_forms::zeta_prime_shift_form(2, 0.25), DomainError);
}
