#pragma once

#include <lunezeta/quadrature.hpp>

namespace lunezeta {

/// Knobs shared by every analytic evaluation.
struct EvalOptions {
  QuadratureConfig quad{};
  /// Neumaier-compensated accumulation of series sums.
  bool compensated = true;
  /// Absolute floor for route-agreement checks, on top of the combined
  /// error estimates of the two routes.
  double route_tol = 1e-8;
  /// Series (Fredholm tails, binomial continuations) stop once the bound on
  /// the remainder drops below this.
  double series_tol = 1e-17;
};

enum class Route { A, B, Both };

}  // namespace lunezeta
