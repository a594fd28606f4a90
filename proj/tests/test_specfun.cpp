#include <doctest.h>

#include <lunezeta/specfun.hpp>

#include <cmath>
#include <numbers>

using namespace lunezeta;
using namespace lunezeta::specfun;

namespace {
bool near(Complex got, Complex want, double tol) { return std::abs(got - want) <= tol; }
}  // namespace

TEST_CASE("log gamma at simple points") {
  CHECK(std::abs(ln_gamma(1.0).value) < 1e-15);
  CHECK(ln_gamma(0.5).value == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
  CHECK(near(ln_gamma(Complex(2, 3)).value, Complex(-2.09285175309273334956, 2.30239654346686762615), 1e-14));
  CHECK_THROWS_AS(ln_gamma(Complex(-2.0, 0.0)), PoleError);
  CHECK_THROWS_AS(ln_gamma(0.0), PoleError);
}

TEST_CASE("log gamma follows the principal branch along a vertical ray") {
  // Im log Gamma(1 + iy) grows without wrapping; check continuity on a fine grid.
  double prev = 0.0;
  for (int i = 1; i <= 2000; ++i) {
    const double im = ln_gamma(Complex(1.0, 0.02 * i)).value.imag();
    CHECK(std::abs(im - prev) < 0.2);
    prev = im;
  }
}

TEST_CASE("polygamma") {
  CHECK(polygamma(0, 1.0).value == doctest::Approx(-Constants::gamma_euler).epsilon(1e-15));
  CHECK(polygamma(1, 1.0).value == doctest::Approx(Constants::zeta2).epsilon(1e-15));
  CHECK(polygamma(0, 1.5).value ==
        doctest::Approx(2.0 - Constants::gamma_euler - 2.0 * Constants::log_2).epsilon(1e-15));
  CHECK(near(polygamma(1, Complex(2, 1)).value, Complex(0.463000096622763786298, -0.294233542759318865583), 1e-14));
  CHECK(near(polygamma(2, Complex(1.5, 2)).value, Complex(0.115938630468702243659, 0.169779143360714505864), 1e-14));
  CHECK(near(polygamma(0, Complex(0.7, 0.3)).value, Complex(-0.971791484812058746432, 0.751313314974531097313),
             1e-14));
  CHECK_THROWS_AS(polygamma(3, 1.0), DomainError);
}

TEST_CASE("Hurwitz zeta values") {
  CHECK(hurwitz_zeta(2.0, 1.0).value == doctest::Approx(Constants::zeta2).epsilon(1e-15));
  CHECK(hurwitz_zeta(0.0, 0.3).value == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(hurwitz_zeta(-1.0, 1.0).value == doctest::Approx(-1.0 / 12.0).epsilon(1e-14));
  CHECK(hurwitz_zeta(3.0, 0.3).value == doctest::Approx(37.6362682943630194587).epsilon(1e-14));
  CHECK(near(hurwitz_zeta(-1.5, Complex(2.5, 1)).value, Complex(-1.10565502825050708823, -2.71943982290932878582),
             1e-13));
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -0.5), DomainError);
}

TEST_CASE("Hurwitz zeta error estimates cover the actual error") {
  const RealResult r = hurwitz_zeta(3.0, 0.3);
  CHECK(std::abs(r.value - 37.6362682943630194587) <= r.abs_err + 1e-14);
  CHECK(r.abs_err < 1e-12);
}

TEST_CASE("s-derivative of the Hurwitz zeta function") {
  CHECK(hurwitz_zeta_sderiv(0, 2.0).value == doctest::Approx(-0.5 * Constants::log_2pi).epsilon(1e-14));
  CHECK(hurwitz_zeta_sderiv(-1, 1.0).value == doctest::Approx(Constants::zetaprime_minus1).epsilon(1e-13));
  CHECK(hurwitz_zeta_sderiv(-2, 1.0).value ==
        doctest::Approx(-Constants::zeta3 / (4.0 * std::numbers::pi * std::numbers::pi)).epsilon(1e-12));
  CHECK(std::abs(hurwitz_zeta_sderiv(-1, 0.7).value - -0.0290914205848884012225) < 1e-13);
  CHECK(std::abs(hurwitz_zeta_sderiv(-3, 1.3).value - -0.0452697098778961266460) < 1e-11);
  CHECK(std::abs(hurwitz_zeta_sderiv(-2, 2.5).value - 0.761846040897178485181) < 1e-12);
  CHECK_THROWS_AS(hurwitz_zeta_sderiv(1, 2.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta_sderiv(0, 0.0), DomainError);
}

TEST_CASE("derivative at general s agrees with a central difference") {
  for (double s : {-1.7, 0.4, 2.5}) {
    const double h = 1e-5;
    const double fd = (hurwitz_zeta(s + h, 1.8).value - hurwitz_zeta(s - h, 1.8).value) / (2 * h);
    CHECK(hurwitz_zeta_ds(s, 1.8).value == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("constants") {
  CHECK(Constants::zetaprime_minus2 ==
        doctest::Approx(-Constants::zeta3 / (4.0 * std::numbers::pi * std::numbers::pi)).epsilon(1e-15));
  CHECK(Constants::log_2pi == doctest::Approx(std::log(2.0 * std::numbers::pi)).epsilon(1e-16));
  CHECK(bernoulli_even(1) == doctest::Approx(1.0 / 6.0));
  CHECK(bernoulli_even(2) == doctest::Approx(-1.0 / 30.0));
}
