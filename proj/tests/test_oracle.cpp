#include <doctest.h>

#include <lunezeta/oracle.hpp>
#include <lunezeta/seq_zeta.hpp>
#include <lunezeta/specfun.hpp>
#include <lunezeta/spheres.hpp>

#include <cmath>

using namespace lunezeta;

TEST_CASE("five-point difference") {
  const auto d = oracle::finite_difference_check([](double x) { return x * x; }, 3.0, 1e-3);
  CHECK(d.derivative == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(d.richardson_error < 1e-9);
}

TEST_CASE("brute-force sphere zeta") {
  const RealResult round = oracle::brute_zeta(DeformedSphere::from_k(2, 1.0), 3.0);
  double direct = 0.0;
  for (int l = 1; l <= 200000; ++l) direct += (2.0 * l + 1.0) * std::pow(l * (l + 1.0), -3.0);
  CHECK(round.value == doctest::Approx(direct).epsilon(1e-12));
  CHECK(round.abs_err < 1e-10);
  for (auto [dim, k, s] : {std::tuple{2, 0.5, 3.0}, std::tuple{3, 1.0 / 1.5, 4.5}}) {
    const DeformedSphere sp = DeformedSphere::from_k(dim, k);
    CHECK(std::abs(oracle::brute_zeta(sp, s).value - sphere_zeta_value(sp, s).value) < 1e-9);
  }
  CHECK_THROWS_AS(oracle::brute_zeta(DeformedSphere::from_k(2, 1.0), 1.5), DomainError);
}

TEST_CASE("brute-force log products") {
  CHECK(oracle::brute_log_product({0, 1.0, -0.5, 0.0}).value == 0.0);
  const double target = specfun::Constants::gamma_euler - specfun::Constants::log_2;
  CHECK(std::abs(oracle::brute_single_log_product().value - target) < 1e-12);
  const RealResult b = oracle::brute_log_product({1, 1.3, 0.0, -1.0});
  CHECK(b.abs_err < 1e-9);
}
