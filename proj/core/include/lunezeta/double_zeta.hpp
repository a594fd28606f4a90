#pragma once

// The double class Z(s; alpha, a, x, p) = sum_{m,n>=1} n^alpha
// [(am+n+x)^2 + p]^{-s}, built on the unshifted series
// chi(s; alpha, a, x) = sum_{m,n>=1} n^alpha (am+n+x)^{-s}.
//
// chi is continued by summing over m in closed form (Hurwitz zeta) and over
// n with the Abel-Plana formula, with w = (x+1)/a + 1:
//
//   chi(s) = 1/2 a^{-s} zeta_H(s, w)
//          + sum_{j=0}^{alpha} c_j(s) a^{j+1-s} zeta_H(s-j-1, w)
//          + a^{-s} i int_0^inf [(1+iy)^alpha zeta_H(s, w+iy/a)
//                                - (1-iy)^alpha zeta_H(s, w-iy/a)] / (e^{2 pi y} - 1) dy
//
// with c_j(s) = alpha!/(alpha-j)! / ((s-1)(s-2)...(s-j-1)).

#include <lunezeta/eval_result.hpp>
#include <lunezeta/options.hpp>
#include <lunezeta/seq_zeta.hpp>

#include <string>
#include <vector>

namespace lunezeta {

struct DoubleZetaParams {
  int alpha = 0;
  double a = 1.0;
  double x = 0.0;
  double p = 0.0;

  /// Throws DomainError unless alpha >= 0, a > 0, a + 1 + x > 0 and
  /// (a+1+x)^2 + p > 0.
  void validate() const;
};

struct ChiTerm {
  std::string name;
  ComplexResult value;
};

struct ChiEvaluation {
  ComplexResult value;
  std::vector<ChiTerm> terms;
};

/// chi(s; alpha, a, x) for real s outside {1, ..., alpha+2}. x may be
/// complex (shifted legs of the squared-sequence route).
ChiEvaluation chi(double s, int alpha, double a, Complex x, const EvalOptions& opts = {});

/// d/ds chi(s; alpha, a, x) at s = 0.
ComplexResult chi_prime_at_zero(int alpha, double a, Complex x, const EvalOptions& opts = {});

struct ChiResidue {
  int location;
  RealResult res1;
  RealResult res0;
};

/// Laurent data of chi(s) at the integer k >= 1: residue and finite part.
/// At integers that are not poles, res1 = 0 and res0 = chi(k).
ChiResidue chi_laurent(int k, int alpha, double a, double x, const EvalOptions& opts = {});

/// Laurent data at every pole s = 1, ..., alpha + 2.
std::vector<ChiResidue> chi_residues(int alpha, double a, double x, const EvalOptions& opts = {});

/// chi_m(t) = sum_{m,n>=1} m n^alpha (am+n+x)^{-t} for t > alpha + 3. It is
/// the a-derivative companion of chi: d/da chi(s) = -s chi_m(s+1).
RealResult chi_m(double t, int alpha, double a, double x, const EvalOptions& opts = {});

/// {(am+n+x)^2} counted with multiplicity n^alpha; zeta(s) = chi(2s).
class QuadraticDoubleSequence final : public SpectralSequence {
 public:
  QuadraticDoubleSequence(int alpha, double a, double x, EvalOptions opts = {});

  int genus() const override { return (alpha_ + 2) / 2; }
  double lambda_min() const override { return (a_ + 1.0 + x_) * (a_ + 1.0 + x_); }
  RealResult zeta_at(int j) const override;
  RealResult zeta0() const override;
  RealResult zeta0_prime() const override;
  RealResult res1_at(int j) const override;
  RealResult res0_at(int j) const override;

 private:
  int alpha_;
  double a_;
  double x_;
};

/// {am+n+x} counted with multiplicity n^alpha; zeta(s) = chi(s).
class LinearDoubleSequence final : public SpectralSequence {
 public:
  LinearDoubleSequence(int alpha, double a, double x, EvalOptions opts = {});

  int genus() const override { return alpha_ + 2; }
  double lambda_min() const override { return a_ + 1.0 + x_; }
  RealResult zeta_at(int j) const override;
  RealResult zeta0() const override;
  RealResult zeta0_prime() const override;
  RealResult res1_at(int j) const override;
  RealResult res0_at(int j) const override;
  /// Direct continuation of chi at the displaced parameter x + c.
  ComplexInvariants shifted(Complex c) const override;

 private:
  int alpha_;
  double a_;
  double x_;
};

/// Z(0) and Z'(0). Route A shifts {(am+n+x)^2} by p; route B combines the
/// legs x +- sqrt(-p) of {am+n+x}. Route B requires p <= 0. Both computes
/// the two and throws RouteDisagreement if they differ by more than the
/// combined error plus opts.route_tol; it returns route A.
ShiftedInvariants Z_invariants(const DoubleZetaParams& params, Route route, const EvalOptions& opts = {});

/// Z(s) for real s away from the poles, by the binomial series
/// sum_k C(-s, k) p^k chi(2s + 2k).
RealResult Z_value(const DoubleZetaParams& params, double s, const EvalOptions& opts = {});

}  // namespace lunezeta
