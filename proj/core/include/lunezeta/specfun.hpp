#pragma once

// Gamma-family and Hurwitz-zeta-family functions on real and complex
// arguments. Every function returns the value together with an absolute
// error estimate; arguments never cross the negative real axis at the call
// sites in this library, so "principal branch" below means the branch of
// log Gamma that is analytic in the slit plane C \ (-inf, 0].

#include <lunezeta/eval_result.hpp>

namespace lunezeta::specfun {

/// Mathematical constants used across the library.
struct Constants {
  static constexpr double pi = 3.14159265358979323846264338327950288;
  static constexpr double gamma_euler = 0.577215664901532860606512090082402431;
  static constexpr double log_2pi = 1.83787706640934548356065947281123527;
  static constexpr double log_2 = 0.693147180559945309417232121458176568;
  static constexpr double zeta2 = 1.64493406684822643647241516664602519;
  static constexpr double zeta3 = 1.20205690315959428539973816151144999;
  static constexpr double zeta4 = 1.08232323371113819151600369654116790;
  /// zeta'(0) = -log(2 pi) / 2
  static constexpr double zetaprime_0 = -0.918938533204672741780329736405617639;
  /// zeta'(-1) = 1/12 - log A (Glaisher)
  static constexpr double zetaprime_minus1 = -0.165421143700450929213919660243;
  /// zeta'(-2) = -zeta(3) / (4 pi^2)
  static constexpr double zetaprime_minus2 = -0.0304484570583932707802515304712;
};

/// Bernoulli number B_{2j} for j = 0..15.
double bernoulli_even(int j);

/// log Gamma(z) on the principal branch.
/// Throws PoleError for z in {0, -1, -2, ...}.
ComplexResult ln_gamma(Complex z);
RealResult ln_gamma(double x);

/// Polygamma psi^{(k)}(z) for k in {0, 1, 2}.
ComplexResult polygamma(int k, Complex z);
RealResult polygamma(int k, double x);

/// Analytic continuation in s of sum_{n>=0} (n + x)^{-s}, for real s != 1
/// and Re x > 0, by Euler-Maclaurin with an explicit remainder bound.
ComplexResult hurwitz_zeta(double s, Complex x);
RealResult hurwitz_zeta(double s, double x);

/// d/ds zeta_H(s, x) at real s != 1, by term-wise differentiated
/// Euler-Maclaurin (no numerical differentiation).
ComplexResult hurwitz_zeta_ds(double s, Complex x);
RealResult hurwitz_zeta_ds(double s, double x);

/// d/ds zeta_H(s, x) at a non-positive integer s0. Throws DomainError for
/// s0 > 0 and for x <= 0.
RealResult hurwitz_zeta_sderiv(int s0, double x);

}  // namespace lunezeta::specfun
