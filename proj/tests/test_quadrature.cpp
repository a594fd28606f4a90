#include <doctest.h>

#include <lunezeta/quadrature.hpp>
#include <lunezeta/specfun.hpp>

#include <cmath>
#include <numbers>

using namespace lunezeta;

TEST_CASE("Plana moments Gamma(2k) zeta(2k) / (2 pi)^{2k}") {
  const double expected[] = {1.0 / 24.0, 1.0 / 240.0, 1.0 / 504.0, 1.0 / 480.0};
  for (int k = 1; k <= 4; ++k) {
    const RealResult r = plana_integral(PlanaIntegrand{[k](double y) { return std::pow(y, 2 * k - 1); }});
    CHECK(std::abs(r.value - expected[k - 1]) < 1e-12);
    CHECK(r.abs_err < 1e-12);
  }
}

TEST_CASE("Plana integral of the log-gamma pairing") {
  const RealResult r = plana_integral(PlanaIntegrand{
      [](double y) { return -2.0 * specfun::ln_gamma(Complex(1.5, y)).value.imag(); }});
  CHECK(std::abs(r.value - -0.0041008643995718585) < 1e-15);
}

TEST_CASE("Abel-Plana reconstruction of Hurwitz zeta values") {
  for (double s : {2.0, 3.0}) {
    for (double q : {1.0, 1.7}) {
      const RealResult p =
          plana_integral(PlanaIntegrand{[s, q](double y) { return -2.0 * std::pow(Complex(q, y), -s).imag(); }});
      const double sum = 0.5 * std::pow(q, -s) + std::pow(q, 1.0 - s) / (s - 1.0) + p.value;
      CHECK(std::abs(sum - specfun::hurwitz_zeta(s, q).value) < 1e-11);
    }
  }
}

TEST_CASE("doubling the panel budget stays within the reported error") {
  PlanaIntegrand f{[](double y) { return -2.0 * specfun::hurwitz_zeta(2.0, Complex(1.25, y)).value.imag(); }};
  QuadratureConfig small;
  QuadratureConfig big;
  big.max_panels = 2 * small.max_panels;
  const RealResult a = plana_integral(f, small);
  const RealResult b = plana_integral(f, big);
  CHECK(std::abs(a.value - b.value) <= a.abs_err + 1e-16);
}

TEST_CASE("Plana integral rejects integrands that do not vanish at zero") {
  CHECK_THROWS_AS(plana_integral(PlanaIntegrand{[](double) { return 1.0; }}), DomainError);
}

TEST_CASE("complex Plana integrand") {
  const ComplexResult r = plana_integral(ComplexPlanaIntegrand{[](double y) { return Complex(y, 2.0 * y); }});
  CHECK(std::abs(r.value - Complex(1.0 / 24.0, 1.0 / 12.0)) < 1e-14);
}

TEST_CASE("finite and semi-infinite integration") {
  const RealResult s = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(std::abs(s.value - 2.0) < 1e-14);
  const RealResult t = integrate_to_infinity([](double x) { return 1.0 / (x * x); }, 2.0);
  CHECK(std::abs(t.value - 0.5) < 1e-13);
  QuadratureConfig tiny;
  tiny.max_panels = 1;
  tiny.target_abs_err = 1e-300;
  tiny.relative_floor = 0.0;
  CHECK_THROWS_AS(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, tiny), ConvergenceError);
}
