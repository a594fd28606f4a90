#pragma once

// Closed-form expressions for zeta(0) and zeta'(0) on the deformed 2- and
// 3-spheres, one per assembly route, and the a-derivative of the
// shifted-sequence form.

#include <lunezeta/eval_result.hpp>
#include <lunezeta/options.hpp>

namespace lunezeta::closed_forms {

/// -1 + a/6 + 1/(6a) for dim 2, -1 for dim 3.
double zeta0(int dim, double a);

/// Shifted-sequence form: Hurwitz and Gamma terms, Plana integrals and the
/// regularised double product.
RealResult zeta_prime_shift_form(int dim, double a, const EvalOptions& opts = {});

/// Squared-sequence form: Barnes-type terms and Plana integrals, no product.
RealResult zeta_prime_square_form(int dim, double a, const EvalOptions& opts = {});

/// d/da of zeta_prime_shift_form, term by term.
RealResult zeta_prime_slope(int dim, double a, const EvalOptions& opts = {});

}  // namespace lunezeta::closed_forms
