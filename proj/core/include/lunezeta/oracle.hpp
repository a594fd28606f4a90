#pragma once

// Brute-force reference values. These use direct lattice summation with
// Euler-Maclaurin tails and finite differences, and share no code with the
// continuation machinery beyond the quadrature routine. They are slow.

#include <lunezeta/double_zeta.hpp>
#include <lunezeta/eval_result.hpp>
#include <lunezeta/spheres.hpp>

#include <functional>

namespace lunezeta::oracle {

/// zeta(s) of the deformed sphere by direct summation over (m, nu), s > dim.
/// The error is the spread between two truncation levels plus tail bounds.
RealResult brute_zeta(const DeformedSphere& sphere, double s);

/// Z(s; alpha, a, x, p) by direct double summation, s > (alpha + 2) / 2.
RealResult brute_double_zeta(const DoubleZetaParams& params, double s);

/// log prod_{m,n} [(1 + p/lambda) e^{-p/lambda + ...}]^{n^alpha} with
/// lambda = (am+n+x)^2, regularised to the genus of {lambda}.
RealResult brute_log_product(const DoubleZetaParams& params);

/// log prod_{n>=2} (1 - 1/n^2)^n e^{1/n}.
RealResult brute_single_log_product();

struct DerivativeEstimate {
  double derivative;
  double richardson_error;
};

/// Five-point central difference; the error estimate is its distance from
/// the three-point difference at the same h.
DerivativeEstimate finite_difference_check(const std::function<double(double)>& fn, double point, double h);

}  // namespace lunezeta::oracle
