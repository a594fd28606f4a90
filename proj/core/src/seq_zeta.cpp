#include <lunezeta/seq_zeta.hpp>
#include <lunezeta/summation.hpp>

#include <cmath>
#include <string>

namespace lunezeta {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr int kMaxFredholmTerms = 400;

// gamma + psi(j) = H_{j-1}
double harmonic(int n) {
  double h = 0.0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

double sign_pow(int j) { return (j % 2 == 0) ? 1.0 : -1.0; }

template <typename D>
EvalResult<D> log_fredholm_impl(const SpectralSequence& t0, D d) {
  const double lmin = t0.lambda_min();
  const double ratio = std::abs(d) / lmin;
  if (ratio >= 1.0) {
    throw ConvergenceError("log_fredholm: |d| = " + std::to_string(std::abs(d)) +
                           " outside the convergence disk of radius " + std::to_string(lmin));
  }
  if (d == D(0.0)) return {D(0.0), 0.0};

  const auto& opts = t0.options();
  Accumulator<D> acc(opts.compensated);
  double err = 0.0;
  const int q = t0.genus();
  D dpow = std::pow(d, q + 1);
  for (int j = q + 1; j <= q + kMaxFredholmTerms; ++j) {
    const RealResult z = t0.zeta_at(j);
    const D term = -sign_pow(j) / j * dpow * z.value;
    acc += term;
    err += std::abs(dpow) / j * z.abs_err;
    const double tail = std::abs(term) * ratio / (1.0 - ratio);
    if (tail <= opts.series_tol) {
      return {acc.value(), err + tail + acc.rounding_bound()};
    }
    dpow *= d;
  }
  throw ConvergenceError("log_fredholm: series did not reach tolerance within " +
                         std::to_string(kMaxFredholmTerms) + " terms");
}

template <typename D>
void shift_corrections(const SpectralSequence& t0, D d, EvalResult<D>& z0, EvalResult<D>& zp) {
  const int q = t0.genus();
  D dpow = d;
  for (int j = 1; j <= q; ++j) {
    const RealResult r1 = t0.res1_at(j);
    const RealResult r0 = t0.res0_at(j);
    const double coeff = sign_pow(j) / j;
    const double hj = harmonic(j - 1);
    z0.value += coeff * r1.value * dpow;
    z0.abs_err += std::abs(coeff * dpow) * r1.abs_err;
    zp.value += coeff * (r0.value + hj * r1.value) * dpow;
    zp.abs_err += std::abs(coeff * dpow) * (r0.abs_err + hj * r1.abs_err);
    dpow *= d;
  }
}

}  // namespace

ComplexInvariants SpectralSequence::shifted(Complex c) const { return shift_invariants(*this, c); }

RealResult log_fredholm(const SpectralSequence& t0, double d) { return log_fredholm_impl<double>(t0, d); }
ComplexResult log_fredholm(const SpectralSequence& t0, Complex d) { return log_fredholm_impl<Complex>(t0, d); }

ShiftedInvariants shift_invariants(const SpectralSequence& t0, double d) {
  if (!(d > -t0.lambda_min())) {
    throw DomainError("shift_invariants: shift " + std::to_string(d) + " would make an element non-positive");
  }
  RealResult z0 = t0.zeta0();
  RealResult zp = t0.zeta0_prime();
  if (d == 0.0) return {z0, zp};
  shift_corrections(t0, d, z0, zp);
  zp -= log_fredholm(t0, d);
  return {z0, zp};
}

ComplexInvariants shift_invariants(const SpectralSequence& t0, Complex d) {
  if (!(d.real() > -t0.lambda_min())) {
    throw DomainError("shift_invariants: shift leaves the right half-plane condition");
  }
  const RealResult z0r = t0.zeta0();
  const RealResult zpr = t0.zeta0_prime();
  ComplexResult z0{Complex(z0r.value, 0.0), z0r.abs_err};
  ComplexResult zp{Complex(zpr.value, 0.0), zpr.abs_err};
  if (d == Complex(0.0, 0.0)) return {z0, zp};
  shift_corrections(t0, d, z0, zp);
  zp -= log_fredholm(t0, d);
  return {z0, zp};
}

ShiftedInvariants square_product_invariants(const SpectralSequence& t0, double d2, int genus_p) {
  if (genus_p < 0) throw DomainError("square_product_invariants: genus must be non-negative");
  const Complex d = std::sqrt(Complex(d2, 0.0));
  const Complex c = Complex(0.0, 1.0) * d;
  const ComplexInvariants plus = t0.shifted(c);
  const ComplexInvariants minus = t0.shifted(-c);

  ComplexResult z0 = plus.zeta0 + minus.zeta0;
  z0 = scaled(z0, 0.5);
  ComplexResult zp = plus.zeta0_prime + minus.zeta0_prime;

  double d2pow = d2;
  double odd_harmonic = 0.0;
  for (int j = 1; j <= genus_p / 2; ++j) {
    odd_harmonic += 1.0 / (2 * j - 1);
    const RealResult r1 = t0.res1_at(2 * j);
    const double coeff = sign_pow(j) / j * odd_harmonic * d2pow;
    zp.value -= coeff * r1.value;
    zp.abs_err += std::abs(coeff) * r1.abs_err;
    d2pow *= d2;
  }

  auto check_real = [](const ComplexResult& r, const char* what) {
    const double tol = 10.0 * r.abs_err + 64.0 * kEps * std::abs(r.value);
    if (std::abs(r.value.imag()) > tol) {
      throw ResidualImaginaryError(std::string("square_product_invariants: ") + what +
                                   " keeps imaginary part " + std::to_string(r.value.imag()));
    }
  };
  check_real(z0, "zeta(0)");
  check_real(zp, "zeta'(0)");
  return {real_part(z0), real_part(zp)};
}

}  // namespace lunezeta
