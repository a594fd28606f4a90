#include <lunezeta/closed_forms.hpp>
#include <lunezeta/oracle.hpp>
#include <lunezeta/specfun.hpp>
#include <lunezeta/spheres.hpp>
#include <lunezeta/summation.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace lunezeta {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DomainError("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : 0;
  den = g ? d / g : 1;
}

Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }

namespace {

constexpr int kMaxExactDenominator = 1000;
constexpr double kMergeRelTol = 1e-12;
constexpr double kSlopeStep = 1e-4;
constexpr double kSlopeAgreement = 1e-5;

void check_dim(int dim) {
  if (dim < 2 || dim > kMaxSphereDim) {
    throw DomainError("dimension must lie in [2, " + std::to_string(kMaxSphereDim) + "]");
  }
}

using Poly = std::vector<Rational>;

Poly times_linear(const Poly& p, Rational c) {  // p(t) * (t + c)
  Poly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] = out[i + 1] + p[i];
    out[i] = out[i] + p[i] * c;
  }
  return out;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// C(nu + N - 1, N - 1) for real nu >= 0.
double binomial_weight(double nu, int N) {
  double w = 1.0;
  for (int i = 1; i <= N - 1; ++i) w *= (nu + i) / i;
  return w;
}

}  // namespace

DeformedSphere DeformedSphere::from_k(int dim, double k) {
  check_dim(dim);
  if (!(k > 0.0 && k <= 1.0)) throw DomainError("k must lie in (0, 1]");
  DeformedSphere s;
  s.dim = dim;
  s.k = k;
  s.a = 1.0 / k;
  for (int q = 1; q <= kMaxExactDenominator; ++q) {
    const double p = std::round(s.a * q);
    if (std::abs(s.a * q - p) <= 1e-12 * s.a * q) {
      s.a_exact = Rational(static_cast<long long>(p), q);
      s.a = s.a_exact->value();
      break;
    }
  }
  return s;
}

DeformedSphere DeformedSphere::from_a(int dim, Rational a) {
  check_dim(dim);
  if (a.num < a.den) throw DomainError("a must be at least 1");
  DeformedSphere s;
  s.dim = dim;
  s.a = a.value();
  s.k = 1.0 / s.a;
  s.a_exact = a;
  return s;
}

std::vector<SpectrumEntry> enumerate_spectrum(const DeformedSphere& sphere, int count) {
  if (count < 1) throw DomainError("enumerate_spectrum: count must be positive");
  const int N = sphere.N();
  // lambda = t (t + N) is increasing in t = am + nu. Every t <= count is
  // enumerated, and m = 0 alone supplies count distinct values there.
  struct Level {
    double t;
    long long key;
    double mult;
  };
  std::vector<Level> levels;
  const double T = count;
  const long long P = sphere.a_exact ? sphere.a_exact->num : 0;
  const long long Q = sphere.a_exact ? sphere.a_exact->den : 0;
  for (int m = 0; sphere.a * m <= T; ++m) {
    for (int nu = (m == 0 ? 1 : 0); sphere.a * m + nu <= T; ++nu) {
      const double w = binomial_weight(nu, N) * (m == 0 ? 1.0 : 2.0);
      levels.push_back({sphere.a * m + nu, P * m + Q * nu, w});
    }
  }
  if (sphere.a_exact) {
    std::sort(levels.begin(), levels.end(), [](const Level& x, const Level& y) { return x.key < y.key; });
  } else {
    std::sort(levels.begin(), levels.end(), [](const Level& x, const Level& y) { return x.t < y.t; });
  }

  std::vector<SpectrumEntry> out;
  double last_t = -1.0;
  long long last_key = -1;
  for (const Level& l : levels) {
    const bool same = sphere.a_exact ? (l.key == last_key)
                                     : (last_t >= 0.0 && std::abs(l.t - last_t) <= kMergeRelTol * l.t);
    if (same) {
      out.back().multiplicity += l.mult;
      continue;
    }
    if (static_cast<int>(out.size()) == count) break;
    const double t = sphere.a_exact ? static_cast<double>(l.key) / static_cast<double>(Q) : l.t;
    out.push_back({t * (t + N), l.mult});
    last_t = l.t;
    last_key = l.key;
  }
  return out;
}

Decomposition decompose(const DeformedSphere& sphere) {
  const int N = sphere.N();
  const Rational inv_fact(1, factorial(N - 1));
  const Rational x_simple(N, 2);
  const Rational p(-N * N, 4);

  // C(nu + N - 1, N - 1) = prod_{i=1}^{N-1} (t + i - N/2) / (N-1)!, t = nu + N/2
  Poly q{Rational(1)};
  for (int i = 1; i <= N - 1; ++i) q = times_linear(q, Rational(2 * i - N, 2));
  // C(n + N - 2, N - 1) = prod_{i=0}^{N-2} (n + i) / (N-1)!, n = nu + 1
  Poly r{Rational(1)};
  for (int i = 0; i <= N - 2; ++i) r = times_linear(r, Rational(i));

  Decomposition d;
  for (std::size_t alpha = 0; alpha < q.size(); ++alpha) {
    const Rational c = q[alpha] * inv_fact;
    if (c.num == 0) continue;
    d.simple.push_back({c, {static_cast<double>(alpha), 2.0, x_simple.value(), p.value()}});
  }
  for (std::size_t alpha = 0; alpha < r.size(); ++alpha) {
    const Rational c = r[alpha] * inv_fact * Rational(2);
    if (c.num == 0) continue;
    d.doubles.push_back({c, {static_cast<int>(alpha), sphere.a, N / 2.0 - 1.0, p.value()}});
  }
  return d;
}

ZetaInvariants zeta_invariants_at(int dim, double a, Route route, const EvalOptions& opts) {
  check_dim(dim);
  if (!(a > 0.5)) throw DomainError("zeta_invariants_at: a must exceed 1/2");
  DeformedSphere sphere;
  sphere.dim = dim;
  sphere.a = a;
  sphere.k = 1.0 / a;
  const Decomposition dec = decompose(sphere);

  RealResult z0{0.0, 0.0};
  RealResult zp{0.0, 0.0};
  for (const WeightedSimple& w : dec.simple) {
    const double c = w.weight.value();
    z0 += scaled(z_zeta0(w.params, opts), c);
    zp += scaled(z_zeta0_prime(w.params, opts), c);
  }
  for (const WeightedDouble& w : dec.doubles) {
    const double c = w.weight.value();
    const ShiftedInvariants inv = Z_invariants(w.params, route, opts);
    z0 += scaled(inv.zeta0, c);
    zp += scaled(inv.zeta0_prime, c);
  }

  if (dim == 2 || dim == 3) {
    const double closed0 = closed_forms::zeta0(dim, a);
    const double tol0 = z0.abs_err + opts.route_tol;
    if (std::abs(z0.value - closed0) > tol0) {
      throw RouteDisagreement("zeta(0) disagrees with the closed form", z0.value, closed0, tol0);
    }
    auto compare = [&](const RealResult& closed, const char* what) {
      const double tol = zp.abs_err + closed.abs_err + opts.route_tol;
      if (std::abs(zp.value - closed.value) > tol) throw RouteDisagreement(what, zp.value, closed.value, tol);
    };
    if (route != Route::B) {
      compare(closed_forms::zeta_prime_shift_form(dim, a, opts), "zeta'(0) disagrees with the shifted closed form");
    }
    if (route != Route::A) {
      compare(closed_forms::zeta_prime_square_form(dim, a, opts), "zeta'(0) disagrees with the squared closed form");
    }
  }

  const double det = std::exp(-zp.value);
  return {z0, zp, {det, det * zp.abs_err}};
}

ZetaInvariants zeta_invariants(const DeformedSphere& sphere, Route route, const EvalOptions& opts) {
  return zeta_invariants_at(sphere.dim, sphere.a, route, opts);
}

RealResult sphere_zeta_value(const DeformedSphere& sphere, double s, const EvalOptions& opts) {
  if (!(s > sphere.dim / 2.0)) throw DomainError("sphere_zeta_value: s must exceed dim/2");
  const Decomposition dec = decompose(sphere);
  RealResult v{0.0, 0.0};
  for (const WeightedSimple& w : dec.simple) v += scaled(z_value(w.params, s, opts), w.weight.value());
  for (const WeightedDouble& w : dec.doubles) v += scaled(Z_value(w.params, s, opts), w.weight.value());
  return v;
}

ExpansionCoefficients expansion(int dim, const EvalOptions& opts) {
  if (dim != 2 && dim != 3) throw DomainError("expansion: dim must be 2 or 3");
  const ZetaInvariants at1 = zeta_invariants_at(dim, 1.0, Route::A, opts);
  const RealResult slope = closed_forms::zeta_prime_slope(dim, 1.0, opts);
  const oracle::DerivativeEstimate fd = oracle::finite_difference_check(
      [&](double a) { return zeta_invariants_at(dim, a, Route::A, opts).zeta0_prime.value; }, 1.0, kSlopeStep);
  if (std::abs(slope.value - fd.derivative) > kSlopeAgreement) {
    throw RouteDisagreement("expansion slope: closed form vs finite difference", slope.value, fd.derivative,
                            kSlopeAgreement);
  }
  ExpansionCoefficients c;
  c.zeta_prime_at_1 = at1.zeta0_prime.value;
  c.slope_Z = slope.value;
  c.slope_Z_fd = fd.derivative;
  c.slope_Z_fd_err = fd.richardson_error;
  c.det_at_1 = at1.det.value;
  c.det_slope = -c.slope_Z * c.det_at_1;
  return c;
}

RealResult heat_trace_partial(const DeformedSphere& sphere, double t, int terms) {
  if (!(t > 0.0)) throw DomainError("heat_trace_partial: t must be positive");
  const std::vector<SpectrumEntry> spec = enumerate_spectrum(sphere, terms);
  Accumulator<double> acc(true);
  for (const SpectrumEntry& e : spec) acc += e.multiplicity * std::exp(-e.eigenvalue * t);

  // Every omitted eigenvalue has am + nu = u > u0. The shell (u, u+1]
  // holds at most u/a + 1 lattice points, each of weight at most
  // 2 C(u + N, N - 1).
  const int N = sphere.N();
  const double u0 = -0.5 * N + std::sqrt(0.25 * N * N + spec.back().eigenvalue);
  double tail = 0.0;
  for (double u = std::floor(u0);; u += 1.0) {
    const double term = (u / sphere.a + 1.0) * 2.0 * binomial_weight(u + 1.0, N) * std::exp(-t * u * (u + N));
    tail += term;
    if (term < 1e-18 * (acc.value() + tail) && u > u0 + 1.0) break;
    if (u > u0 + 1e7) break;
  }
  return {acc.value(), tail + acc.rounding_bound()};
}

HurwitzShiftExpansion hurwitz_shift_expansion(double s, double x, double q, double delta) {
  if (std::abs(s) < 1e-12 || std::abs(s + 1.0) < 1e-12) {
    throw PoleError("hurwitz_shift_expansion: s + 1 and s + 2 must avoid 1");
  }
  const double e = q * delta;
  const double z0 = specfun::hurwitz_zeta(s, x).value;
  const double z1 = specfun::hurwitz_zeta(s + 1.0, x).value;
  const double z2 = specfun::hurwitz_zeta(s + 2.0, x).value;
  const double d0 = specfun::hurwitz_zeta_ds(s, x).value;
  const double d1 = specfun::hurwitz_zeta_ds(s + 1.0, x).value;
  const double d2 = specfun::hurwitz_zeta_ds(s + 2.0, x).value;
  HurwitzShiftExpansion r;
  r.zeta = z0 - s * e * z1 + 0.5 * s * (s + 1.0) * e * e * z2;
  r.zeta_prime = d0 - e * (z1 + s * d1) + 0.5 * e * e * ((2.0 * s + 1.0) * z2 + s * (s + 1.0) * d2);
  return r;
}

}  // namespace lunezeta
