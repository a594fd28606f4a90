#include <doctest.h>

#include <lunezeta/closed_forms.hpp>
#include <lunezeta/spheres.hpp>
#include <lunezeta/specfun.hpp>

#include <cmath>
#include <map>
#include <numbers>

using namespace lunezeta;
using specfun::Constants;

namespace {

// Brute-force multiplicities from the lattice (m, nu) with m in Z, nu >= 0.
std::map<long long, double> lattice_counts(int dim, int a_int, int tmax) {
  std::map<long long, double> out;
  const int N = dim - 1;
  for (int m = -tmax; m <= tmax; ++m) {
    for (int nu = 0; nu <= tmax; ++nu) {
      const long long t = static_cast<long long>(a_int) * std::abs(m) + nu;
      if (t == 0 || t > tmax) continue;
      double w = 1.0;
      for (int i = 1; i <= N - 1; ++i) w *= static_cast<double>(nu + i) / i;
      out[t * (t + N)] += w;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("round 2-sphere spectrum") {
  const auto s = enumerate_spectrum(DeformedSphere::from_k(2, 1.0), 3);
  REQUIRE(s.size() == 3);
  CHECK(s[0].eigenvalue == 2.0);
  CHECK(s[0].multiplicity == 3.0);
  CHECK(s[1].eigenvalue == 6.0);
  CHECK(s[1].multiplicity == 5.0);
  CHECK(s[2].eigenvalue == 12.0);
  CHECK(s[2].multiplicity == 7.0);
}

TEST_CASE("spectrum at a = 2 matches lattice enumeration") {
  const auto s = enumerate_spectrum(DeformedSphere::from_k(2, 0.5), 2);
  REQUIRE(s.size() == 2);
  CHECK(s[0].eigenvalue == 2.0);
  CHECK(s[0].multiplicity == 1.0);
  CHECK(s[1].eigenvalue == 6.0);
  CHECK(s[1].multiplicity == 3.0);
  for (int dim : {2, 3, 4}) {
    const auto brute = lattice_counts(dim, 2, 50);
    const auto got = enumerate_spectrum(DeformedSphere::from_k(dim, 0.5), 30);
    auto it = brute.begin();
    for (const SpectrumEntry& e : got) {
      REQUIRE(it != brute.end());
      CHECK(e.eigenvalue == static_cast<double>(it->first));
      CHECK(e.multiplicity == it->second);
      ++it;
    }
  }
}

TEST_CASE("round 3-sphere spectrum nu(nu+2) with multiplicity (nu+1)^2") {
  const auto s = enumerate_spectrum(DeformedSphere::from_k(3, 1.0), 8);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double nu = i + 1.0;
    CHECK(s[i].eigenvalue == nu * (nu + 2.0));
    CHECK(s[i].multiplicity == (nu + 1.0) * (nu + 1.0));
  }
}

TEST_CASE("spectrum is increasing, and integral at integer a") {
  for (int a : {1, 3, 7}) {
    const auto s = enumerate_spectrum(DeformedSphere::from_k(3, 1.0 / a), 200);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i].eigenvalue > s[i - 1].eigenvalue);
    for (const auto& e : s) CHECK(e.multiplicity == std::round(e.multiplicity));
  }
  const auto irr = enumerate_spectrum(DeformedSphere::from_k(2, 1.0 / std::numbers::sqrt2), 50);
  for (std::size_t i = 1; i < irr.size(); ++i) CHECK(irr[i].eigenvalue > irr[i - 1].eigenvalue);
}

TEST_CASE("rational a is detected and merged exactly") {
  const DeformedSphere s = DeformedSphere::from_k(2, 0.8);
  REQUIRE(s.a_exact.has_value());
  CHECK(s.a_exact->num == 5);
  CHECK(s.a_exact->den == 4);
  CHECK_FALSE(DeformedSphere::from_k(2, 1.0 / std::numbers::pi).a_exact.has_value());
  const DeformedSphere f = DeformedSphere::from_a(2, Rational(3, 2));
  CHECK(f.k == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(DeformedSphere::from_a(2, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(DeformedSphere::from_k(1, 0.5), DomainError);
  CHECK_THROWS_AS(DeformedSphere::from_k(2, 0.0), DomainError);
  CHECK_THROWS_AS(DeformedSphere::from_k(2, 1.5), DomainError);
}

TEST_CASE("decomposition parameters for dims 2 and 3") {
  const Decomposition d2 = decompose(DeformedSphere::from_k(2, 0.5));
  REQUIRE(d2.simple.size() == 1);
  CHECK(d2.simple[0].weight == Rational(1));
  CHECK(d2.simple[0].params.alpha == 0.0);
  CHECK(d2.simple[0].params.x == 0.5);
  CHECK(d2.simple[0].params.p == -0.25);
  REQUIRE(d2.doubles.size() == 1);
  CHECK(d2.doubles[0].weight == Rational(2));
  CHECK(d2.doubles[0].params.alpha == 0);
  CHECK(d2.doubles[0].params.a == 2.0);
  CHECK(d2.doubles[0].params.x == -0.5);

  const Decomposition d3 = decompose(DeformedSphere::from_k(3, 1.0));
  REQUIRE(d3.simple.size() == 1);
  CHECK(d3.simple[0].params.alpha == 1.0);
  CHECK(d3.simple[0].params.x == 1.0);
  CHECK(d3.simple[0].params.p == -1.0);
  REQUIRE(d3.doubles.size() == 1);
  CHECK(d3.doubles[0].weight == Rational(2));
  CHECK(d3.doubles[0].params.alpha == 1);
  CHECK(d3.doubles[0].params.x == 0.0);
}

TEST_CASE("decomposition weights reproduce the binomial multiplicities exactly") {
  for (int dim : {4, 5, 7}) {
    const int N = dim - 1;
    const Decomposition d = decompose(DeformedSphere::from_k(dim, 1.0));
    for (int nu = 1; nu <= 5; ++nu) {
      // C(nu + N - 1, N - 1) as an exact rational
      Rational binom(1);
      for (int i = 1; i <= N - 1; ++i) binom = binom * Rational(nu + i, i);
      Rational simple(0);
      for (const auto& w : d.simple) {
        Rational pw(1);
        for (int k = 0; k < static_cast<int>(w.params.alpha); ++k) pw = pw * Rational(2 * nu + N, 2);
        simple = simple + w.weight * pw;
      }
      CHECK(simple == binom);
      // double part: 2 C(n + N - 2, N - 1) in powers of n = nu + 1
      Rational dbl(0);
      for (const auto& w : d.doubles) {
        Rational pw(1);
        for (int k = 0; k < w.params.alpha; ++k) pw = pw * Rational(nu + 1);
        dbl = dbl + w.weight * pw;
      }
      CHECK(dbl == Rational(2) * binom);
    }
  }
}

TEST_CASE("zeta(0) of S^2 is -1 + a/6 + 1/(6a)") {
  for (double k : {1.0, 0.9, 0.75, 0.6, 0.5, 0.4, 1.0 / std::numbers::e, 0.3, 0.2, 0.1}) {
    const DeformedSphere s = DeformedSphere::from_k(2, k);
    const ZetaInvariants inv = zeta_invariants(s);
    CHECK(std::abs(inv.zeta0.value - (-1.0 + s.a / 6.0 + 1.0 / (6.0 * s.a))) < 1e-10);
  }
}

TEST_CASE("zeta(0) of S^3 is -1") {
  for (double k : {1.0, 0.7, 0.5, 1.0 / std::numbers::pi, 0.2}) {
    CHECK(std::abs(zeta_invariants(DeformedSphere::from_k(3, k)).zeta0.value + 1.0) < 1e-10);
  }
}

TEST_CASE("round sphere values") {
  const ZetaInvariants s2 = zeta_invariants(DeformedSphere::from_k(2, 1.0), Route::Both);
  CHECK(std::abs(s2.zeta0_prime.value - (4.0 * Constants::zetaprime_minus1 - 0.5)) < 1e-10);
  CHECK(std::abs(s2.zeta0_prime.value - -1.161684575) < 1e-8);
  CHECK(s2.det.value * std::exp(s2.zeta0_prime.value) == doctest::Approx(1.0).epsilon(1e-15));
  const ZetaInvariants s3 = zeta_invariants(DeformedSphere::from_k(3, 1.0), Route::Both);
  CHECK(std::abs(s3.zeta0_prime.value -
                 (2.0 * Constants::zetaprime_minus2 + 2.0 * Constants::zetaprime_0 + Constants::log_2)) < 1e-10);
  // The round 4-sphere: zeta(0) = 29/90 - 1 (heat coefficient minus the zero mode).
  const ZetaInvariants s4 = zeta_invariants(DeformedSphere::from_k(4, 1.0), Route::Both);
  CHECK(std::abs(s4.zeta0.value - (29.0 / 90.0 - 1.0)) < 1e-10);
}

TEST_CASE("both routes agree for every dimension and a") {
  for (int dim : {2, 3}) {
    for (double a : {1.0, 1.5, 2.0, std::numbers::e, std::numbers::pi, 5.0, 10.0}) {
      const double A = zeta_invariants_at(dim, a, Route::A).zeta0_prime.value;
      const double B = zeta_invariants_at(dim, a, Route::B).zeta0_prime.value;
      CHECK(std::abs(A - B) < 1e-7);
    }
  }
  CHECK_NOTHROW(zeta_invariants_at(5, 2.5, Route::Both));
}

TEST_CASE("spectral sums agree with the decomposition inside the convergence region") {
  for (auto [dim, s] : {std::pair{2, 3.0}, std::pair{3, 4.0}}) {
    for (double k : {1.0, 0.5, 1.0 / 1.7}) {
      const DeformedSphere sp = DeformedSphere::from_k(dim, k);
      const auto spec = enumerate_spectrum(sp, 3000);
      double sum = 0.0;
      for (const auto& e : spec) sum += e.multiplicity * std::pow(e.eigenvalue, -s);
      // Weyl tail: N(L) ~ k L for dim 2, k L^{3/2} / 3 for dim 3.
      const double L = spec.back().eigenvalue;
      const double tail = dim == 2 ? sp.k * std::pow(L, 1.0 - s) / (s - 1.0)
                                   : 0.5 * sp.k * std::pow(L, 1.5 - s) / (s - 1.5);
      CHECK(std::abs(sum + tail - sphere_zeta_value(sp, s).value) < 1e-8);
    }
  }
}

TEST_CASE("first-order coefficient of zeta'(0) at the round sphere") {
  for (int dim : {2, 3}) {
    const ExpansionCoefficients e = expansion(dim);
    CHECK(e.slope_Z == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(std::abs(e.slope_Z - e.slope_Z_fd) < 1e-5);
    CHECK(e.det_slope == doctest::Approx(-e.slope_Z * e.det_at_1));
  }
  CHECK_THROWS_AS(expansion(4), DomainError);
}

TEST_CASE("heat trace") {
  const DeformedSphere round = DeformedSphere::from_k(2, 1.0);
  double direct = 0.0;
  for (int l = 1; l <= 200; ++l) direct += (2 * l + 1) * std::exp(-l * (l + 1.0) * 0.1);
  const RealResult h = heat_trace_partial(round, 0.1, 100);
  CHECK(h.value == doctest::Approx(direct).epsilon(1e-13));
  const RealResult late = heat_trace_partial(round, 20.0, 5);
  CHECK(late.value == doctest::Approx(3.0 * std::exp(-40.0)).epsilon(1e-12));
  for (double k : {1.0, 0.5}) {
    const DeformedSphere s = DeformedSphere::from_k(2, k);
    const RealResult early = heat_trace_partial(s, 1e-3, 4000);
    CHECK(early.value == doctest::Approx(k / 1e-3).epsilon(0.05));
    CHECK(early.abs_err < 1e-6);
  }
}

TEST_CASE("second-order shift expansion of the Hurwitz zeta function") {
  const double delta = 1e-3;
  for (double s : {-1.5, 0.5, 2.0}) {
    const HurwitzShiftExpansion e = hurwitz_shift_expansion(s, 1.5, 0.7, delta);
    const double x = 1.5 + 0.7 * delta;
    CHECK(std::abs(e.zeta - specfun::hurwitz_zeta(s, x).value) < 1e-8);
    CHECK(std::abs(e.zeta_prime - specfun::hurwitz_zeta_ds(s, x).value) < 1e-8);
  }
  CHECK_THROWS_AS(hurwitz_shift_expansion(-1.0, 1.5, 0.7, delta), PoleError);
  CHECK_THROWS_AS(hurwitz_shift_expansion(0.0, 1.5, 0.7, delta), PoleError);
}
