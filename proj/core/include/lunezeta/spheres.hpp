#pragma once

// Zeta invariants of the Laplacian on the deformed sphere S^{N+1}_k, the
// sphere whose azimuthal metric factor is scaled by k = 1/a. Its spectrum is
// (am + nu)(am + nu + N) with binomial multiplicities; splitting off m = 0
// and completing the square turns the zeta function into a finite
// combination of simple and double zeta functions.

#include <lunezeta/double_zeta.hpp>
#include <lunezeta/eval_result.hpp>
#include <lunezeta/options.hpp>
#include <lunezeta/simple_zeta.hpp>

#include <optional>
#include <vector>

namespace lunezeta {

/// Exact rational with 64-bit parts, always normalised (den > 0, gcd 1).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

/// Largest supported dimension; keeps the exact binomial arithmetic in range.
inline constexpr int kMaxSphereDim = 12;

struct DeformedSphere {
  int dim = 2;
  double k = 1.0;
  double a = 1.0;
  /// Set when a is known exactly as num/den; spectrum merging is then exact.
  std::optional<Rational> a_exact;

  int N() const { return dim - 1; }

  /// Validates dim in [2, kMaxSphereDim] and k in (0, 1]. Values of a within
  /// 1e-12 of an integer are recorded as exact.
  static DeformedSphere from_k(int dim, double k);
  static DeformedSphere from_a(int dim, Rational a);
};

struct SpectrumEntry {
  double eigenvalue;
  double multiplicity;
};

/// The first `count` distinct eigenvalues, increasing, with multiplicities.
std::vector<SpectrumEntry> enumerate_spectrum(const DeformedSphere& sphere, int count);

struct WeightedSimple {
  Rational weight;
  SimpleZetaParams params;
};

struct WeightedDouble {
  Rational weight;
  DoubleZetaParams params;
};

/// zeta(s) = sum weight * z(s; params) + sum weight * Z(s; params).
struct Decomposition {
  std::vector<WeightedSimple> simple;
  std::vector<WeightedDouble> doubles;
};

Decomposition decompose(const DeformedSphere& sphere);

struct ZetaInvariants {
  RealResult zeta0;
  RealResult zeta0_prime;
  RealResult det;
};

/// zeta(0), zeta'(0) and det for the sphere. For dim 2 and 3 the
/// closed-form expressions are evaluated as well and must agree with the
/// generic assembly (RouteDisagreement otherwise).
ZetaInvariants zeta_invariants(const DeformedSphere& sphere, Route route = Route::A, const EvalOptions& opts = {});

/// Same as zeta_invariants but for any a > 1/2, so that derivatives at a = 1
/// can be taken from both sides.
ZetaInvariants zeta_invariants_at(int dim, double a, Route route = Route::A, const EvalOptions& opts = {});

/// zeta(s) from the decomposition, for s above the abscissa dim/2.
RealResult sphere_zeta_value(const DeformedSphere& sphere, double s, const EvalOptions& opts = {});

struct ExpansionCoefficients {
  double zeta_prime_at_1;
  /// d zeta'(0) / da at a = 1 from the differentiated closed form.
  double slope_Z;
  /// The same slope from a five-point central difference, h = 1e-4.
  double slope_Z_fd;
  double slope_Z_fd_err;
  double det_at_1;
  double det_slope;
};

/// First-order expansion in a = 1 + delta for dim 2 or 3. Throws
/// RouteDisagreement if the two slopes differ by more than 1e-5.
ExpansionCoefficients expansion(int dim, const EvalOptions& opts = {});

/// sum multiplicity * exp(-lambda t) over the first `terms` distinct
/// eigenvalues, with a bound on the rest folded into abs_err.
RealResult heat_trace_partial(const DeformedSphere& sphere, double t, int terms);

/// Second-order Taylor data of zeta_H and zeta_H' in the shift x -> x + q delta.
struct HurwitzShiftExpansion {
  double zeta;
  double zeta_prime;
};
HurwitzShiftExpansion hurwitz_shift_expansion(double s, double x, double q, double delta);

}  // namespace lunezeta
