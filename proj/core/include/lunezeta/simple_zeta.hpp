#pragma once

// The single-index class z(s; alpha, beta, x, p) = sum_{n>=1} (n+x)^alpha
// [(n+x)^beta + p]^{-s}.

#include <lunezeta/eval_result.hpp>
#include <lunezeta/options.hpp>
#include <lunezeta/seq_zeta.hpp>

#include <vector>

namespace lunezeta {

struct SimpleZetaParams {
  double alpha = 0.0;
  double beta = 2.0;
  double x = 0.0;
  double p = 0.0;

  /// Throws DomainError unless alpha >= 0, beta > 0, 1 + x > 0 and
  /// (1 + x)^beta + p > 0.
  void validate() const;
  /// (1 + alpha) / beta
  double convergence_abscissa() const { return (1.0 + alpha) / beta; }
};

/// {(n+x)^beta}_{n>=1} counted with multiplicity (n+x)^alpha, whose zeta
/// function is zeta_H(beta s - alpha, x + 1).
class PowerSequence final : public SpectralSequence {
 public:
  PowerSequence(double alpha, double beta, double x, EvalOptions opts = {});

  int genus() const override { return genus_; }
  double lambda_min() const override;
  RealResult zeta_at(int j) const override;
  RealResult zeta0() const override;
  RealResult zeta0_prime() const override;
  RealResult res1_at(int j) const override;
  RealResult res0_at(int j) const override;

 private:
  /// Index j with beta j - alpha == 1, or 0 if there is none.
  int pole_index() const { return pole_index_; }

  double alpha_;
  double beta_;
  double x_;
  int genus_;
  int pole_index_;
};

/// Series value for s > (1+alpha)/beta: direct sum plus a Hurwitz tail.
RealResult z_value(const SimpleZetaParams& params, double s, const EvalOptions& opts = {});

/// Continuation sum_j C(-s, j) p^j zeta_H(beta(s+j) - alpha, x+1).
/// Requires |p| < (1+x)^beta and s away from the poles.
RealResult z_continuation(const SimpleZetaParams& params, double s, const EvalOptions& opts = {});

RealResult z_zeta0(const SimpleZetaParams& params, const EvalOptions& opts = {});
RealResult z_zeta0_prime(const SimpleZetaParams& params, const EvalOptions& opts = {});

struct SimplePole {
  double location;
  double residue;
};

/// Poles at (1+alpha)/beta - j, j = 0, 1, ..., down to min_location.
/// Locations at non-positive integers and vanishing residues are dropped.
std::vector<SimplePole> z_poles(const SimpleZetaParams& params, double min_location = -10.0);

}  // namespace lunezeta
