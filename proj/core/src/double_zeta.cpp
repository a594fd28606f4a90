#include <lunezeta/double_zeta.hpp>
#include <lunezeta/quadrature.hpp>
#include <lunezeta/specfun.hpp>
#include <lunezeta/summation.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace lunezeta {

namespace {

constexpr double kIntTol = 1e-12;
constexpr int kMaxBinomialTerms = 400;
const Complex kI(0.0, 1.0);

double falling(int alpha, int j) {
  double f = 1.0;
  for (int i = 0; i < j; ++i) f *= alpha - i;
  return f;
}

double harmonic(int n) {
  double h = 0.0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

// c_j(s) = alpha!/(alpha-j)! / prod_{i=1}^{j+1} (s - i)
double c_coeff(int alpha, int j, double s) {
  double den = 1.0;
  for (int i = 1; i <= j + 1; ++i) den *= s - i;
  return falling(alpha, j) / den;
}

bool is_pole(double s, int alpha) {
  const double r = std::round(s);
  return std::abs(s - r) < kIntTol && r >= 1.0 && r <= alpha + 2.0;
}

Complex base_point(double a, Complex x) {
  if (!(a > 0.0)) throw DomainError("chi: a must be positive");
  const Complex w = (x + 1.0) / a + 1.0;
  if (!(w.real() > 0.0)) throw DomainError("chi: (x+1)/a + 1 must have positive real part");
  return w;
}

// i int_0^inf [(1+iy)^alpha F(w + iy/a) - (1-iy)^alpha F(w - iy/a)] / (e^{2 pi y} - 1) dy
// F must satisfy F(conj v) = conj F(v). For real w the bracket collapses to
// -2 Im[(1+iy)^alpha F(w + iy/a)].
ComplexResult plana_pair(int alpha, double a, Complex w, const std::function<ComplexResult(Complex)>& F,
                         const EvalOptions& opts) {
  double worst = 0.0;
  if (w.imag() == 0.0) {
    PlanaIntegrand f{[&](double y) {
      const ComplexResult v = F(w + kI * y / a);
      worst = std::max(worst, v.abs_err * std::pow(std::hypot(1.0, y), alpha));
      return -2.0 * (std::pow(Complex(1.0, y), alpha) * v.value).imag();
    }};
    const RealResult r = plana_integral(f, opts.quad);
    return {Complex(r.value, 0.0), r.abs_err + worst};
  }
  ComplexPlanaIntegrand f{[&](double y) {
    const ComplexResult up = F(w + kI * y / a);
    const ComplexResult down = F(w - kI * y / a);
    worst = std::max(worst, (up.abs_err + down.abs_err) * std::pow(std::hypot(1.0, y), alpha));
    return kI * (std::pow(Complex(1.0, y), alpha) * up.value - std::pow(Complex(1.0, -y), alpha) * down.value);
  }};
  ComplexResult r = plana_integral(f, opts.quad);
  r.abs_err += worst;
  return r;
}

RealResult real_checked(const ComplexResult& r) { return {r.value.real(), r.abs_err}; }

}  // namespace

void DoubleZetaParams::validate() const {
  if (alpha < 0) throw DomainError("double zeta: alpha must be a non-negative integer");
  if (!(a > 0.0)) throw DomainError("double zeta: a must be positive");
  if (!(a + 1.0 + x > 0.0)) throw DomainError("double zeta: requires am + n + x > 0");
  if (!((a + 1.0 + x) * (a + 1.0 + x) + p > 0.0)) {
    throw DomainError("double zeta: requires (am+n+x)^2 + p > 0");
  }
}

ChiEvaluation chi(double s, int alpha, double a, Complex x, const EvalOptions& opts) {
  if (alpha < 0) throw DomainError("chi: alpha must be a non-negative integer");
  const Complex w = base_point(a, x);
  if (is_pole(s, alpha)) throw PoleError("chi: s = " + std::to_string(s) + " is a pole");
  const double as = std::pow(a, -s);

  ChiEvaluation out;
  out.terms.push_back({"half_line", scaled(specfun::hurwitz_zeta(s, w), 0.5 * as)});
  for (int j = 0; j <= alpha; ++j) {
    const double coeff = c_coeff(alpha, j, s) * std::pow(a, j + 1 - s);
    out.terms.push_back({"boundary_" + std::to_string(j), scaled(specfun::hurwitz_zeta(s - j - 1, w), coeff)});
  }
  const ComplexResult integral =
      plana_pair(alpha, a, w, [s](Complex v) { return specfun::hurwitz_zeta(s, v); }, opts);
  out.terms.push_back({"plana", scaled(integral, as)});

  Accumulator<Complex> acc(opts.compensated);
  double err = 0.0;
  for (const auto& t : out.terms) {
    acc += t.value.value;
    err += t.value.abs_err;
  }
  out.value = {acc.value(), err + acc.rounding_bound()};
  return out;
}

ComplexResult chi_prime_at_zero(int alpha, double a, Complex x, const EvalOptions& opts) {
  if (alpha < 0) throw DomainError("chi: alpha must be a non-negative integer");
  const Complex w = base_point(a, x);
  const double la = std::log(a);

  Accumulator<Complex> acc(opts.compensated);
  double err = 0.0;
  auto add = [&](const ComplexResult& r) {
    acc += r.value;
    err += r.abs_err;
  };

  const ComplexResult h0 = specfun::hurwitz_zeta(0.0, w);
  const ComplexResult h0d = specfun::hurwitz_zeta_ds(0.0, w);
  add(scaled(h0, -0.5 * la));
  add(scaled(h0d, 0.5));
  for (int j = 0; j <= alpha; ++j) {
    const double c = c_coeff(alpha, j, 0.0) * std::pow(a, j + 1);
    add(scaled(specfun::hurwitz_zeta(-j - 1.0, w), c * (harmonic(j + 1) - la)));
    add(scaled(specfun::hurwitz_zeta_ds(-j - 1.0, w), c));
  }
  const ComplexResult i0 = plana_pair(alpha, a, w, [](Complex v) { return specfun::hurwitz_zeta(0.0, v); }, opts);
  add(scaled(i0, -la));
  const ComplexResult i1 = plana_pair(
      alpha, a, w,
      [](Complex v) {
        ComplexResult g = specfun::ln_gamma(v);
        g.value -= 0.5 * specfun::Constants::log_2pi;
        return g;
      },
      opts);
  add(i1);
  return {acc.value(), err + acc.rounding_bound()};
}

ChiResidue chi_laurent(int k, int alpha, double a, double x, const EvalOptions& opts) {
  if (k < 1) throw DomainError("chi_laurent: k must be >= 1");
  if (alpha < 0) throw DomainError("chi: alpha must be a non-negative integer");
  const double w = base_point(a, Complex(x, 0.0)).real();
  const double la = std::log(a);
  RealResult r1{0.0, 0.0};
  RealResult r0{0.0, 0.0};

  // Half-line term 1/2 a^{-s} zeta_H(s, w).
  if (k == 1) {
    const RealResult psi = specfun::polygamma(0, w);
    r1 += {0.5 / a, 0.0};
    r0 += {0.5 / a * (-psi.value - la), 0.5 / a * psi.abs_err};
  } else {
    r0 += scaled(specfun::hurwitz_zeta(static_cast<double>(k), w), 0.5 * std::pow(a, -k));
  }

  // Boundary terms c_j(s) a^{j+1-s} zeta_H(s-j-1, w).
  for (int j = 0; j <= alpha; ++j) {
    const double fall = falling(alpha, j);
    if (k <= j + 1) {
      // Simple pole of c_j at s = k.
      double rc = fall;
      double dlog = 0.0;
      for (int i = 1; i <= j + 1; ++i) {
        if (i == k) continue;
        rc /= (k - i);
        dlog -= 1.0 / (k - i);
      }
      const double ap = std::pow(a, j + 1 - k);
      const RealResult h = specfun::hurwitz_zeta(static_cast<double>(k - j - 1), w);
      const RealResult hd = specfun::hurwitz_zeta_ds(static_cast<double>(k - j - 1), w);
      const double hval = ap * h.value;
      const double hder = ap * (-la * h.value + hd.value);
      const double herr = ap * (h.abs_err * (1.0 + std::abs(la)) + hd.abs_err);
      r1 += {rc * hval, std::abs(rc) * ap * h.abs_err};
      r0 += {rc * hder + rc * dlog * hval, std::abs(rc) * herr * (1.0 + std::abs(dlog))};
    } else if (k == j + 2) {
      // zeta_H(s-j-1, w) = 1/(s-k) - psi(w) + O(s-k).
      const double c = c_coeff(alpha, j, k);
      const RealResult psi = specfun::polygamma(0, w);
      r1 += {c / a, 0.0};
      r0 += {c / a * (-psi.value - la - harmonic(j + 1)), std::abs(c / a) * psi.abs_err};
    } else {
      r0 += scaled(specfun::hurwitz_zeta(static_cast<double>(k - j - 1), w),
                   c_coeff(alpha, j, k) * std::pow(a, j + 1 - k));
    }
  }

  // Plana term a^{-s} I(s).
  const Complex wc(w, 0.0);
  if (k == 1) {
    QuadratureConfig cfg = opts.quad;
    PlanaIntegrand poly{[alpha](double y) { return -2.0 * std::pow(Complex(1.0, y), alpha).imag(); }};
    const RealResult R = plana_integral(poly, cfg);
    const ComplexResult P = plana_pair(
        alpha, a, wc,
        [](Complex v) {
          ComplexResult psi = specfun::polygamma(0, v);
          psi.value = -psi.value;
          return psi;
        },
        opts);
    r1 += scaled(R, 1.0 / a);
    r0 += {(P.value.real() - la * R.value) / a, (P.abs_err + std::abs(la) * R.abs_err) / a};
  } else {
    const double kd = k;
    const ComplexResult I = plana_pair(alpha, a, wc, [kd](Complex v) { return specfun::hurwitz_zeta(kd, v); }, opts);
    r0 += scaled(real_checked(I), std::pow(a, -k));
  }
  return {k, r1, r0};
}

std::vector<ChiResidue> chi_residues(int alpha, double a, double x, const EvalOptions& opts) {
  std::vector<ChiResidue> out;
  for (int k = 1; k <= alpha + 2; ++k) out.push_back(chi_laurent(k, alpha, a, x, opts));
  return out;
}

RealResult chi_m(double t, int alpha, double a, double x, const EvalOptions& opts) {
  if (alpha < 0) throw DomainError("chi_m: alpha must be a non-negative integer");
  if (!(t > alpha + 3.0)) throw DomainError("chi_m: requires t > alpha + 3");
  const double w = base_point(a, Complex(x, 0.0)).real();

  // Sum over m in closed form: sum_m m (m + v - 1)^{-t} = zeta_H(t-1, v) - (v-1) zeta_H(t, v)
  // with v = w + nu/a for n = nu + 1. The n-sum then goes through Abel-Plana.
  auto h = [t](Complex v) {
    const ComplexResult z1 = specfun::hurwitz_zeta(t - 1.0, v);
    const ComplexResult z0 = specfun::hurwitz_zeta(t, v);
    return ComplexResult{z1.value - (v - 1.0) * z0.value, z1.abs_err + std::abs(v - 1.0) * z0.abs_err};
  };

  Accumulator<double> acc(opts.compensated);
  double err = 0.0;
  const ComplexResult g0 = h(Complex(w, 0.0));
  acc += 0.5 * g0.value.real();
  err += 0.5 * g0.abs_err;

  // int_0^inf (nu+1)^alpha h(w + nu/a) d nu, expanded in powers of u = v - w using
  // int_w^inf u^k zeta_H(tau, v) dv = k! zeta_H(tau-k-1, w) / prod_{i=1}^{k+1} (tau - i).
  auto moment = [w](int k, double tau) {
    double den = 1.0;
    for (int i = 1; i <= k + 1; ++i) den *= tau - i;
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return scaled(specfun::hurwitz_zeta(tau - k - 1.0, w), fact / den);
  };
  for (int k = 0; k <= alpha; ++k) {
    const double coeff = a * falling(alpha, k) / std::tgamma(k + 1.0) * std::pow(a, k);
    const RealResult part = moment(k, t - 1.0) - moment(k + 1, t) - scaled(moment(k, t), w - 1.0);
    acc += coeff * part.value;
    err += std::abs(coeff) * part.abs_err;
  }

  const ComplexResult integral = plana_pair(alpha, a, Complex(w, 0.0), h, opts);
  acc += integral.value.real();
  err += integral.abs_err;

  const double scale = std::pow(a, -t);
  return {scale * acc.value(), scale * (err + acc.rounding_bound())};
}

// ---------------------------------------------------------------------------

QuadraticDoubleSequence::QuadraticDoubleSequence(int alpha, double a, double x, EvalOptions opts)
    : SpectralSequence(opts), alpha_(alpha), a_(a), x_(x) {
  DoubleZetaParams{alpha, a, x, 0.0}.validate();
}

RealResult QuadraticDoubleSequence::zeta_at(int j) const {
  if (j <= genus()) throw DomainError("QuadraticDoubleSequence::zeta_at: j must exceed the genus");
  return real_checked(chi(2.0 * j, alpha_, a_, Complex(x_, 0.0), options()).value);
}

RealResult QuadraticDoubleSequence::zeta0() const {
  return real_checked(chi(0.0, alpha_, a_, Complex(x_, 0.0), options()).value);
}

RealResult QuadraticDoubleSequence::zeta0_prime() const {
  return scaled(real_checked(chi_prime_at_zero(alpha_, a_, Complex(x_, 0.0), options())), 2.0);
}

RealResult QuadraticDoubleSequence::res1_at(int j) const {
  return scaled(chi_laurent(2 * j, alpha_, a_, x_, options()).res1, 0.5);
}

RealResult QuadraticDoubleSequence::res0_at(int j) const { return chi_laurent(2 * j, alpha_, a_, x_, options()).res0; }

LinearDoubleSequence::LinearDoubleSequence(int alpha, double a, double x, EvalOptions opts)
    : SpectralSequence(opts), alpha_(alpha), a_(a), x_(x) {
  DoubleZetaParams{alpha, a, x, 0.0}.validate();
}

RealResult LinearDoubleSequence::zeta_at(int j) const {
  if (j <= genus()) throw DomainError("LinearDoubleSequence::zeta_at: j must exceed the genus");
  return real_checked(chi(static_cast<double>(j), alpha_, a_, Complex(x_, 0.0), options()).value);
}

RealResult LinearDoubleSequence::zeta0() const {
  return real_checked(chi(0.0, alpha_, a_, Complex(x_, 0.0), options()).value);
}

RealResult LinearDoubleSequence::zeta0_prime() const {
  return real_checked(chi_prime_at_zero(alpha_, a_, Complex(x_, 0.0), options()));
}

RealResult LinearDoubleSequence::res1_at(int j) const { return chi_laurent(j, alpha_, a_, x_, options()).res1; }

RealResult LinearDoubleSequence::res0_at(int j) const { return chi_laurent(j, alpha_, a_, x_, options()).res0; }

ComplexInvariants LinearDoubleSequence::shifted(Complex c) const {
  const Complex xs = Complex(x_, 0.0) + c;
  return {chi(0.0, alpha_, a_, xs, options()).value, chi_prime_at_zero(alpha_, a_, xs, options())};
}

// ---------------------------------------------------------------------------

ShiftedInvariants Z_invariants(const DoubleZetaParams& params, Route route, const EvalOptions& opts) {
  params.validate();
  auto route_a = [&] {
    const QuadraticDoubleSequence seq(params.alpha, params.a, params.x, opts);
    return shift_invariants(seq, params.p);
  };
  auto route_b = [&] {
    const LinearDoubleSequence seq(params.alpha, params.a, params.x, opts);
    return square_product_invariants(seq, params.p, seq.genus());
  };
  switch (route) {
    case Route::A:
      return route_a();
    case Route::B:
      return route_b();
    case Route::Both:
      break;
  }
  const ShiftedInvariants A = route_a();
  const ShiftedInvariants B = route_b();
  const double tol0 = A.zeta0.abs_err + B.zeta0.abs_err + opts.route_tol;
  if (std::abs(A.zeta0.value - B.zeta0.value) > tol0) {
    throw RouteDisagreement("Z(0) routes disagree", A.zeta0.value, B.zeta0.value, tol0);
  }
  const double tol1 = A.zeta0_prime.abs_err + B.zeta0_prime.abs_err + opts.route_tol;
  if (std::abs(A.zeta0_prime.value - B.zeta0_prime.value) > tol1) {
    throw RouteDisagreement("Z'(0) routes disagree", A.zeta0_prime.value, B.zeta0_prime.value, tol1);
  }
  return A;
}

RealResult Z_value(const DoubleZetaParams& params, double s, const EvalOptions& opts) {
  params.validate();
  const double lmin = (params.a + 1.0 + params.x) * (params.a + 1.0 + params.x);
  const double ratio = std::abs(params.p) / lmin;
  if (ratio >= 1.0) throw ConvergenceError("Z_value: |p| must be below (a+1+x)^2");
  Accumulator<double> acc(opts.compensated);
  double err = 0.0;
  double binom = 1.0;  // C(-s, k)
  double ppow = 1.0;
  for (int k = 0; k < kMaxBinomialTerms; ++k) {
    const double arg = 2.0 * (s + k);
    if (binom != 0.0) {
      if (is_pole(arg, params.alpha)) throw PoleError("Z_value: s is a pole");
      const RealResult c = real_checked(chi(arg, params.alpha, params.a, Complex(params.x, 0.0), opts).value);
      const double term = binom * ppow * c.value;
      acc += term;
      err += std::abs(binom * ppow) * c.abs_err;
      const double next_ratio = ratio * std::abs((s + k) / (k + 1.0));
      if (arg > params.alpha + 3.0 && next_ratio < 1.0 &&
          std::abs(term) * next_ratio / (1.0 - next_ratio) <= opts.series_tol) {
        return {acc.value(), err + std::abs(term) * next_ratio / (1.0 - next_ratio) + acc.rounding_bound()};
      }
    }
    if (params.p == 0.0) break;
    binom *= -(s + k) / (k + 1.0);
    ppow *= params.p;
    if (binom == 0.0) break;
  }
  if (params.p == 0.0 || binom == 0.0) return {acc.value(), err + acc.rounding_bound()};
  throw ConvergenceError("Z_value: binomial series did not converge");
}

}  // namespace lunezeta
