#include <doctest.h>

#include <lunezeta/double_zeta.hpp>
#include <lunezeta/oracle.hpp>
#include <lunezeta/seq_zeta.hpp>
#include <lunezeta/simple_zeta.hpp>
#include <lunezeta/specfun.hpp>

#include <cmath>
#include <numbers>

using namespace lunezeta;

TEST_CASE("log_fredholm vanishes at d = 0") {
  const PowerSequence seq(0.0, 2.0, 0.0);
  CHECK(log_fredholm(seq, 0.0).value == 0.0);
}

TEST_CASE("log_fredholm of {n^2} is log(sinh(pi sqrt d) / (pi sqrt d))") {
  const PowerSequence seq(0.0, 2.0, 0.0);  // genus 0
  const RealResult r = log_fredholm(seq, 0.5);
  CHECK(std::abs(r.value - 0.7183062930946228944680) < 1e-14);
  CHECK(r.abs_err < 1e-13);
  CHECK_THROWS_AS(log_fredholm(seq, 1.5), ConvergenceError);
}

TEST_CASE("log_fredholm matches the directly summed double product") {
  const QuadraticDoubleSequence seq(0, 1.0, -0.5);
  const RealResult series = log_fredholm(seq, -0.25);
  const RealResult brute = oracle::brute_log_product({0, 1.0, -0.5, -0.25});
  CHECK(std::abs(series.value - brute.value) < 1e-10);
  CHECK(std::abs(series.value - brute.value) <= series.abs_err + brute.abs_err);
}

TEST_CASE("log_fredholm matches the single product with multiplicity n") {
  const PowerSequence seq(1.0, 2.0, 1.0);
  const RealResult series = log_fredholm(seq, -1.0);
  CHECK(std::abs(series.value - oracle::brute_single_log_product().value) < 1e-12);
}

TEST_CASE("shift_invariants at zero shift is the identity") {
  const QuadraticDoubleSequence seq(0, 1.5, -0.5);
  const ShiftedInvariants s = shift_invariants(seq, 0.0);
  CHECK(s.zeta0.value == doctest::Approx(seq.zeta0().value).epsilon(1e-15));
  CHECK(s.zeta0_prime.value == doctest::Approx(seq.zeta0_prime().value).epsilon(1e-15));
}

TEST_CASE("genus-one zeta(0) moves by -Res_1 d") {
  const QuadraticDoubleSequence seq(0, 1.5, -0.5);
  REQUIRE(seq.genus() == 1);
  const double d = -0.25;
  const ShiftedInvariants s = shift_invariants(seq, d);
  CHECK(s.zeta0.value == doctest::Approx(seq.zeta0().value - seq.res1_at(1).value * d).epsilon(1e-14));
  CHECK(s.zeta0.value == doctest::Approx(1.5 / 12.0 + 1.0 / 18.0).epsilon(1e-12));
}

TEST_CASE("d-derivative of zeta(0, T_d) at d = 0 is -Res_1") {
  const QuadraticDoubleSequence seq(0, 2.0, -0.5);
  const double h = 1e-4;
  const double fd = (shift_invariants(seq, h).zeta0.value - shift_invariants(seq, -h).zeta0.value) / (2 * h);
  CHECK(fd == doctest::Approx(-seq.res1_at(1).value).epsilon(1e-9));
}

TEST_CASE("squared-sequence route agrees with the shift route") {
  for (double a : {1.0, 2.0, std::numbers::pi}) {
    const QuadraticDoubleSequence sq(0, a, -0.5);
    const LinearDoubleSequence lin(0, a, -0.5);
    const ShiftedInvariants A = shift_invariants(sq, -0.25);
    const ShiftedInvariants B = square_product_invariants(lin, -0.25, lin.genus());
    CHECK(std::abs(A.zeta0_prime.value - B.zeta0_prime.value) < 1e-8);
    CHECK(std::abs(A.zeta0.value - B.zeta0.value) < 1e-10);
  }
}

TEST_CASE("squared-sequence correction at genus two is -Res_1(s=2) b^2 for d^2 = -b^2") {
  // With d^2 = 0 the legs coincide and the correction vanishes; the
  // difference quotient in d^2 isolates the correction term.
  const LinearDoubleSequence lin(0, 1.5, -0.5);
  REQUIRE(lin.genus() == 2);
  const ShiftedInvariants zero = square_product_invariants(lin, 0.0, 2);
  CHECK(zero.zeta0_prime.value == doctest::Approx(2.0 * lin.zeta0_prime().value).epsilon(1e-14));
  const double d2 = -1e-3;
  const ShiftedInvariants small = square_product_invariants(lin, d2, 2);
  const Complex c = Complex(0.0, 1.0) * std::sqrt(Complex(d2, 0.0));
  const ComplexInvariants up = lin.shifted(c);
  const ComplexInvariants down = lin.shifted(-c);
  const double legs = (up.zeta0_prime.value + down.zeta0_prime.value).real();
  CHECK(small.zeta0_prime.value - legs == doctest::Approx(-lin.res1_at(2).value * -d2).epsilon(1e-10));
}
