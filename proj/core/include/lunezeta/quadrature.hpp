#pragma once

#include <lunezeta/eval_result.hpp>

#include <functional>

namespace lunezeta {

struct QuadratureConfig {
  double target_abs_err = 1e-15;
  int max_panels = 4000;
  /// Accept once the error estimate is below this fraction of int |f|.
  /// Integrands built from special functions carry ~1e-15 relative noise,
  /// which no amount of bisection removes.
  double relative_floor = 1e-14;
  /// Upper cut of the Plana ray. Zero means "derive from the integrand".
  double cutoff_Y = 0.0;
};

/// Integrand of a Plana-type integral. The caller assembles differences such
/// as i[g(iy) - g(-iy)] so that f is real (or complex, for complex shifts).
template <typename T>
struct BasicPlanaIntegrand {
  std::function<T(double)> f;
  /// f(y) = O(y) as y -> 0. When set, plana_integral checks it numerically.
  bool vanishes_at_zero = true;
};
using PlanaIntegrand = BasicPlanaIntegrand<double>;
using ComplexPlanaIntegrand = BasicPlanaIntegrand<Complex>;

/// int_0^inf f(y) / (exp(2 pi y) - 1) dy.
/// Throws ConvergenceError if max_panels is exhausted before the target is
/// reached, and DomainError if the O(y) tag is violated.
RealResult plana_integral(const PlanaIntegrand& f, const QuadratureConfig& cfg = {});
ComplexResult plana_integral(const ComplexPlanaIntegrand& f, const QuadratureConfig& cfg = {});

/// Adaptive Gauss-Kronrod 15 on a finite interval [lo, hi].
RealResult integrate(const std::function<double(double)>& f, double lo, double hi,
                     const QuadratureConfig& cfg = {});

/// int_lo^inf f(t) dt for f decaying at least like t^-2, via t = lo + u/(1-u).
RealResult integrate_to_infinity(const std::function<double(double)>& f, double lo,
                                 const QuadratureConfig& cfg = {});

}  // namespace lunezeta
