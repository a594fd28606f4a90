#include <lunezeta/simple_zeta.hpp>
#include <lunezeta/specfun.hpp>
#include <lunezeta/summation.hpp>

#include <cmath>
#include <string>

namespace lunezeta {

namespace {

constexpr double kIntTol = 1e-12;
constexpr int kMaxBinomialTerms = 2000;

bool near_integer(double v, double& rounded) {
  rounded = std::round(v);
  return std::abs(v - rounded) < kIntTol;
}

}  // namespace

void SimpleZetaParams::validate() const {
  if (!(alpha >= 0.0)) throw DomainError("simple zeta: alpha must be >= 0");
  if (!(beta > 0.0)) throw DomainError("simple zeta: beta must be > 0");
  if (!(1.0 + x > 0.0)) throw DomainError("simple zeta: requires n + x > 0 for n >= 1");
  if (!(std::pow(1.0 + x, beta) + p > 0.0)) {
    throw DomainError("simple zeta: requires (1+x)^beta + p > 0");
  }
}

PowerSequence::PowerSequence(double alpha, double beta, double x, EvalOptions opts)
    : SpectralSequence(opts), alpha_(alpha), beta_(beta), x_(x) {
  SimpleZetaParams{alpha, beta, x, 0.0}.validate();
  const double ratio = (1.0 + alpha) / beta;
  double r = 0.0;
  if (near_integer(ratio, r)) {
    genus_ = static_cast<int>(r);
    pole_index_ = genus_;
  } else {
    genus_ = static_cast<int>(std::floor(ratio));
    pole_index_ = 0;
  }
}

double PowerSequence::lambda_min() const { return std::pow(1.0 + x_, beta_); }

RealResult PowerSequence::zeta_at(int j) const {
  if (j <= genus_) throw DomainError("PowerSequence::zeta_at: j must exceed the genus");
  return specfun::hurwitz_zeta(beta_ * j - alpha_, x_ + 1.0);
}

RealResult PowerSequence::zeta0() const { return specfun::hurwitz_zeta(-alpha_, x_ + 1.0); }

RealResult PowerSequence::zeta0_prime() const {
  return scaled(specfun::hurwitz_zeta_ds(-alpha_, x_ + 1.0), beta_);
}

RealResult PowerSequence::res1_at(int j) const {
  if (j >= 1 && j == pole_index()) return {1.0 / beta_, 0.0};
  return {0.0, 0.0};
}

RealResult PowerSequence::res0_at(int j) const {
  if (j >= 1 && j == pole_index()) {
    const RealResult psi = specfun::polygamma(0, x_ + 1.0);
    return {-psi.value, psi.abs_err};
  }
  return specfun::hurwitz_zeta(beta_ * j - alpha_, x_ + 1.0);
}

RealResult z_value(const SimpleZetaParams& params, double s, const EvalOptions& opts) {
  params.validate();
  if (!(s > params.convergence_abscissa())) {
    throw DomainError("z_value: s = " + std::to_string(s) + " outside the convergence half-plane");
  }
  const double beta = params.beta;
  const double alpha = params.alpha;
  const double p = params.p;

  // Direct part up to n = N, chosen so that |p| / (N+1+x)^beta <= 1/100.
  int n_direct = 10;
  if (p != 0.0) {
    const double need = std::pow(100.0 * std::abs(p), 1.0 / beta) - params.x;
    n_direct = std::max(n_direct, static_cast<int>(std::ceil(need)));
  }
  Accumulator<double> acc(opts.compensated);
  for (int n = 1; n <= n_direct; ++n) {
    const double u = n + params.x;
    acc += std::pow(u, alpha) * std::pow(std::pow(u, beta) + p, -s);
  }

  // Tail: sum_{n>N} u^{alpha - beta s} (1 + p u^{-beta})^{-s}, expanded
  // binomially into Hurwitz zeta values at N + 1 + x.
  const double q = n_direct + 1 + params.x;
  const double ratio = std::abs(p) / std::pow(q, beta);
  double err = 0.0;
  double binom = 1.0;  // C(-s, k)
  double ppow = 1.0;
  for (int k = 0; k < kMaxBinomialTerms; ++k) {
    const RealResult h = specfun::hurwitz_zeta(beta * (s + k) - alpha, q);
    const double term = binom * ppow * h.value;
    acc += term;
    err += std::abs(binom * ppow) * h.abs_err;
    // Remaining terms are bounded geometrically once |C| stops growing.
    const double next_ratio = ratio * std::abs((s + k) / (k + 1.0));
    if (next_ratio < 0.5 && std::abs(term) * next_ratio / (1.0 - next_ratio) <= opts.series_tol) {
      return {acc.value(), err + std::abs(term) * next_ratio / (1.0 - next_ratio) + acc.rounding_bound()};
    }
    if (p == 0.0) return {acc.value(), err + acc.rounding_bound()};
    binom *= -(s + k) / (k + 1.0);
    ppow *= p;
  }
  throw ConvergenceError("z_value: tail expansion did not converge");
}

RealResult z_continuation(const SimpleZetaParams& params, double s, const EvalOptions& opts) {
  params.validate();
  const double lmin = std::pow(1.0 + params.x, params.beta);
  const double ratio = std::abs(params.p) / lmin;
  if (ratio >= 1.0) throw ConvergenceError("z_continuation: |p| must be below (1+x)^beta");
  Accumulator<double> acc(opts.compensated);
  double err = 0.0;
  double binom = 1.0;
  double ppow = 1.0;
  for (int k = 0; k < kMaxBinomialTerms; ++k) {
    const double arg = params.beta * (s + k) - params.alpha;
    if (std::abs(arg - 1.0) < kIntTol) {
      if (binom != 0.0) throw PoleError("z_continuation: s is a pole");
    } else if (binom != 0.0) {
      const RealResult h = specfun::hurwitz_zeta(arg, 1.0 + params.x);
      const double term = binom * ppow * h.value;
      acc += term;
      err += std::abs(binom * ppow) * h.abs_err;
      // For arg > 1 the Hurwitz factor is at most (1+x)^{-arg} times a
      // bounded constant, so the remaining terms shrink by ratio * |C|.
      const double next_ratio = ratio * std::abs((s + k) / (k + 1.0));
      if (arg > 2.0 && next_ratio < 1.0 && std::abs(term) * next_ratio / (1.0 - next_ratio) <= opts.series_tol) {
        return {acc.value(), err + std::abs(term) * next_ratio / (1.0 - next_ratio) + acc.rounding_bound()};
      }
    }
    if (params.p == 0.0) return {acc.value(), err + acc.rounding_bound()};
    binom *= -(s + k) / (k + 1.0);
    ppow *= params.p;
    if (binom == 0.0) return {acc.value(), err + acc.rounding_bound()};
  }
  throw ConvergenceError("z_continuation: series did not converge");
}

RealResult z_zeta0(const SimpleZetaParams& params, const EvalOptions& opts) {
  params.validate();
  const PowerSequence seq(params.alpha, params.beta, params.x, opts);
  if (params.p == 0.0) return seq.zeta0();
  // zeta(0) only needs the residues; avoid the Fredholm series.
  RealResult z0 = seq.zeta0();
  double ppow = params.p;
  for (int j = 1; j <= seq.genus(); ++j) {
    const RealResult r1 = seq.res1_at(j);
    const double coeff = ((j % 2 == 0) ? 1.0 : -1.0) / j * ppow;
    z0.value += coeff * r1.value;
    z0.abs_err += std::abs(coeff) * r1.abs_err;
    ppow *= params.p;
  }
  return z0;
}

RealResult z_zeta0_prime(const SimpleZetaParams& params, const EvalOptions& opts) {
  params.validate();
  const PowerSequence seq(params.alpha, params.beta, params.x, opts);
  return shift_invariants(seq, params.p).zeta0_prime;
}

std::vector<SimplePole> z_poles(const SimpleZetaParams& params, double min_location) {
  params.validate();
  std::vector<SimplePole> poles;
  const double first = params.convergence_abscissa();
  double binom = 1.0;  // C(-loc, j) evaluated at loc = first - j
  for (int j = 0; first - j >= min_location; ++j) {
    const double loc = first - j;
    // C(-loc, j) = prod_{i<j} (-loc - i) / j!
    binom = 1.0;
    for (int i = 0; i < j; ++i) binom *= (-loc - i) / (i + 1.0);
    const double residue = binom * std::pow(params.p, j) / params.beta;
    double rounded = 0.0;
    const bool nonpositive_int = near_integer(loc, rounded) && rounded <= 0.0;
    if (!nonpositive_int && residue != 0.0) poles.push_back({loc, residue});
  }
  return poles;
}

}  // namespace lunezeta
