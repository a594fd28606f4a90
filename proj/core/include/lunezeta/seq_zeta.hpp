#pragma once

// Zeta invariants of shifted sequences. A sequence T0 = {lambda_n} of
// spectral type is described by its genus q, its smallest element, the
// values zeta(j, T0) for j > q, and the Laurent data of zeta(s, T0) at the
// integers 1..q. From these the invariants of T_d = {lambda_n + d} and of
// L = {lambda_n^2 + d^2} follow without touching the individual elements.

#include <lunezeta/eval_result.hpp>
#include <lunezeta/options.hpp>

namespace lunezeta {

struct ShiftedInvariants {
  RealResult zeta0;
  RealResult zeta0_prime;
};

struct ComplexInvariants {
  ComplexResult zeta0;
  ComplexResult zeta0_prime;
};

class SpectralSequence {
 public:
  virtual ~SpectralSequence() = default;

  virtual int genus() const = 0;
  virtual double lambda_min() const = 0;
  /// zeta(j, T0) for integer j >= genus + 1.
  virtual RealResult zeta_at(int j) const = 0;
  virtual RealResult zeta0() const = 0;
  virtual RealResult zeta0_prime() const = 0;
  /// Residue of zeta(s, T0) at s = j. Zero when j is not a pole.
  virtual RealResult res1_at(int j) const = 0;
  /// lim_{s->j} [zeta(s, T0) - res1/(s - j)].
  virtual RealResult res0_at(int j) const = 0;

  /// Invariants of T_c for a complex shift c. The default transports them
  /// with the shift formula (complex Fredholm series); sequences that can
  /// evaluate their zeta function at shifted parameters directly override it.
  virtual ComplexInvariants shifted(Complex c) const;

  const EvalOptions& options() const { return opts_; }

 protected:
  explicit SpectralSequence(EvalOptions opts) : opts_(opts) {}

 private:
  EvalOptions opts_;
};

/// log F(d, T0) = -sum_{j>q} (-1)^j / j * d^j * zeta(j, T0).
/// Throws ConvergenceError when |d| >= lambda_min.
RealResult log_fredholm(const SpectralSequence& t0, double d);
ComplexResult log_fredholm(const SpectralSequence& t0, Complex d);

/// zeta(0) and zeta'(0) of T_d = {lambda + d}. Requires |d| < lambda_min.
ShiftedInvariants shift_invariants(const SpectralSequence& t0, double d);
ComplexInvariants shift_invariants(const SpectralSequence& t0, Complex d);

/// zeta(0) and zeta'(0) of L = {lambda^2 + d2} from the two legs T_{+-i d},
/// d = sqrt(d2). genus_p is the genus of T0; the correction runs over
/// j = 1..floor(genus_p / 2). Throws ResidualImaginaryError when the
/// imaginary parts of the assembled values do not cancel.
ShiftedInvariants square_product_invariants(const SpectralSequence& t0, double d2, int genus_p);

}  // namespace lunezeta
