#include <lunezeta/closed_forms.hpp>
#include <lunezeta/double_zeta.hpp>
#include <lunezeta/quadrature.hpp>
#include <lunezeta/simple_zeta.hpp>
#include <lunezeta/specfun.hpp>
#include <lunezeta/summation.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace lunezeta::closed_forms {

namespace {

using specfun::Constants;
constexpr int kMaxSlopeTerms = 400;

void check(int dim, double a) {
  if (dim != 2 && dim != 3) throw DomainError("closed forms exist for dim 2 and 3 only");
  if (!(a > 0.5)) throw DomainError("closed forms need a > 1/2");
}

// int_0^inf -2 Im g(y) / (e^{2 pi y} - 1) dy, i.e. the Plana pairing
// i[g(y) - conj g(y)] of a function that is real on the real axis.
RealResult plana_im(const std::function<ComplexResult(double)>& g, const EvalOptions& opts) {
  double worst = 0.0;
  PlanaIntegrand f{[&](double y) {
    const ComplexResult v = g(y);
    worst = std::max(worst, 2.0 * v.abs_err);
    return -2.0 * v.value.imag();
  }};
  RealResult r = plana_integral(f, opts.quad);
  r.abs_err += worst;
  return r;
}

ComplexResult lngamma(Complex z) { return specfun::ln_gamma(z); }

// log(x / sinh x) for x >= 0 without overflow or cancellation.
double log_x_over_sinh(double x) {
  if (x < 1e-4) return -x * x / 6.0;
  if (x > 20.0) return std::log(2.0 * x) - x - std::log1p(-std::exp(-2.0 * x));
  return std::log(x / std::sinh(x));
}

RealResult zeta_prime_H(int s0, double w) { return specfun::hurwitz_zeta_sderiv(s0, w); }

// d/da log F(p, {(am+n+x)^2}) = sum_{j>q} (-1)^j p^j 2 chi_m(2j+1)
RealResult log_fredholm_slope(int alpha, double a, double x, double p, const EvalOptions& opts) {
  const int q = (alpha + 2) / 2;
  const double lmin = (a + 1.0 + x) * (a + 1.0 + x);
  const double ratio = std::abs(p) / lmin;
  if (ratio >= 1.0) throw ConvergenceError("log_fredholm_slope: |p| outside the convergence disk");
  Accumulator<double> acc(opts.compensated);
  double err = 0.0;
  double ppow = std::pow(-p, q + 1);
  for (int j = q + 1; j <= q + kMaxSlopeTerms; ++j) {
    const RealResult c = chi_m(2.0 * j + 1.0, alpha, a, x, opts);
    const double term = 2.0 * ppow * c.value;
    acc += term;
    err += 2.0 * std::abs(ppow) * c.abs_err;
    const double tail = std::abs(term) * ratio / (1.0 - ratio);
    if (tail <= opts.series_tol) return {acc.value(), err + tail + acc.rounding_bound()};
    ppow *= -p;
  }
  throw ConvergenceError("log_fredholm_slope: series did not converge");
}

// ---------------------------------------------------------------------------

RealResult shift_form_2(double a, const EvalOptions& opts) {
  const double w = 1.0 / (2.0 * a) + 1.0;
  RealResult v{-2.0 * Constants::log_2pi + 1.0 + a / 3.0 - (a + 1.0 / a) * std::log(a) / 3.0, 0.0};
  v += scaled(specfun::ln_gamma(w), 2.0);
  v += scaled(specfun::hurwitz_zeta(2.0, w), 1.0 / (4.0 * a * a));
  v -= scaled(specfun::polygamma(0, w), 1.0 / (2.0 * a));
  v -= scaled(zeta_prime_H(-1, w), 4.0 * a);
  v += scaled(plana_im([&](double y) { return lngamma(Complex(w, y / a)); }, opts), 4.0);
  v += scaled(plana_im([&](double y) { return specfun::hurwitz_zeta(2.0, Complex(w, y / a)); }, opts),
              1.0 / (2.0 * a * a));
  const QuadraticDoubleSequence seq(0, a, -0.5, opts);
  v -= scaled(log_fredholm(seq, -0.25), 2.0);
  return v;
}

RealResult shift_form_3(double a, const EvalOptions& opts) {
  const double u = 1.0 / a;
  const double w = u + 1.0;
  const PowerSequence single(1.0, 2.0, 1.0, opts);
  RealResult v = RealResult{Constants::gamma_euler - 1.0, 0.0} + scaled(zeta_prime_H(-1, 2.0), 2.0) -
                 log_fredholm(single, -1.0);
  v += RealResult{1.5 - a / 6.0 + u + 5.0 * std::log(a) / 6.0 - 11.0 * Constants::log_2pi / 6.0, 0.0};
  v += scaled(specfun::ln_gamma(w), 4.0);
  v += scaled(specfun::hurwitz_zeta(2.0, w), 1.0 / (a * a));
  v -= scaled(specfun::polygamma(0, w), 2.0 / a);
  v -= scaled(zeta_prime_H(-1, w), 4.0 * a);
  v += scaled(zeta_prime_H(-2, w), 2.0 * a * a);
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g = lngamma(Complex(1.0, y) / a + 1.0);
                    return ComplexResult{Complex(1.0, y) * g.value, std::hypot(1.0, y) * g.abs_err};
                  },
                  opts),
              4.0);
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g = specfun::hurwitz_zeta(2.0, Complex(1.0, y) / a + 1.0);
                    return ComplexResult{Complex(1.0, y) * g.value, std::hypot(1.0, y) * g.abs_err};
                  },
                  opts),
              2.0 / (a * a));
  const QuadraticDoubleSequence seq(1, a, 0.0, opts);
  v -= scaled(log_fredholm(seq, -1.0), 2.0);
  return v;
}

RealResult square_form_2(double a, const EvalOptions& opts) {
  const double w = 1.0 + 1.0 / a;
  RealResult v{-(a / 3.0 + 1.0 / (3.0 * a)) * std::log(a) - 2.0 * Constants::log_2pi + a / 3.0 + 1.0 +
                   1.0 / (2.0 * a) - 2.0 * a * Constants::zetaprime_minus1,
               0.0};
  v += specfun::ln_gamma(w);
  v -= scaled(zeta_prime_H(-1, w), 2.0 * a);
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g1 = lngamma(Complex(1.0, y / a));
                    const ComplexResult g2 = lngamma(Complex(w, y / a));
                    return g1 + g2;
                  },
                  opts),
              2.0);
  return v;
}

RealResult square_form_3(double a, const EvalOptions& opts) {
  const double w = 2.0 / a + 1.0;
  RealResult v{Constants::log_2 + 2.0 * Constants::zetaprime_minus1 - 1.0 + 5.0 * std::log(a) / 6.0 - a / 6.0 -
                   5.0 * Constants::log_2pi / 6.0 - 2.0 * a * Constants::zetaprime_minus1 +
                   a * a * Constants::zetaprime_minus2,
               0.0};
  v += specfun::ln_gamma(w);
  v -= scaled(zeta_prime_H(-1, w), 2.0 * a);
  v += scaled(zeta_prime_H(-2, w), a * a);
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g1 = lngamma(Complex(1.0, y / a));
                    const ComplexResult g2 = lngamma(Complex(w, y / a));
                    return g1 + g2;
                  },
                  opts),
              2.0);
  // This pairing is even in y, so it keeps the real part.
  double worst = 0.0;
  PlanaIntegrand f{[&](double y) {
    const ComplexResult g = lngamma(Complex(w, y / a));
    worst = std::max(worst, 2.0 * y * g.abs_err);
    return y * (log_x_over_sinh(Constants::pi * y / a) + 2.0 * g.value.real());
  }};
  RealResult r = plana_integral(f, opts.quad);
  r.abs_err += worst;
  v -= scaled(r, 2.0);
  return v;
}

// ---------------------------------------------------------------------------

RealResult slope_2(double a, const EvalOptions& opts) {
  const double w = 1.0 / (2.0 * a) + 1.0;
  const double dw = -1.0 / (2.0 * a * a);
  const double la = std::log(a);
  RealResult v{1.0 / 3.0 - (1.0 - 1.0 / (a * a)) * la / 3.0 - (a + 1.0 / a) / (3.0 * a), 0.0};
  const RealResult psi = specfun::polygamma(0, w);
  v += scaled(psi, 2.0 * dw);
  v -= scaled(specfun::hurwitz_zeta(3.0, w), dw / (2.0 * a * a));
  v -= scaled(specfun::hurwitz_zeta(2.0, w), 1.0 / (2.0 * a * a * a));
  v -= scaled(specfun::polygamma(1, w), dw / (2.0 * a));
  v += scaled(psi, 1.0 / (2.0 * a * a));
  v -= scaled(zeta_prime_H(-1, w), 4.0);
  // d/dw zeta_H'(-1, w) = -zeta_H(0, w) + zeta_H'(0, w)
  const RealResult lg = specfun::ln_gamma(w);
  const RealResult dzp{-(0.5 - w) + lg.value - 0.5 * Constants::log_2pi, lg.abs_err};
  v -= scaled(dzp, 4.0 * a * dw);

  auto U = [&](double y) { return Complex(w, y / a); };
  auto dU = [&](double y) { return -Complex(0.5, y) / (a * a); };
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g = specfun::polygamma(0, U(y));
                    return ComplexResult{g.value * dU(y), std::abs(dU(y)) * g.abs_err};
                  },
                  opts),
              4.0);
  v -= scaled(plana_im([&](double y) { return specfun::hurwitz_zeta(2.0, U(y)); }, opts), 1.0 / (a * a * a));
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g = specfun::hurwitz_zeta(3.0, U(y));
                    return ComplexResult{-2.0 * g.value * dU(y), 2.0 * std::abs(dU(y)) * g.abs_err};
                  },
                  opts),
              1.0 / (2.0 * a * a));
  v -= scaled(log_fredholm_slope(0, a, -0.5, -0.25, opts), 2.0);
  return v;
}

RealResult slope_3(double a, const EvalOptions& opts) {
  const double w = 1.0 / a + 1.0;
  const double dw = -1.0 / (a * a);
  RealResult v{-1.0 / 6.0 - 1.0 / (a * a) + 5.0 / (6.0 * a), 0.0};
  const RealResult psi = specfun::polygamma(0, w);
  v += scaled(psi, 4.0 * dw);
  v -= scaled(specfun::hurwitz_zeta(3.0, w), 2.0 * dw / (a * a));
  v -= scaled(specfun::hurwitz_zeta(2.0, w), 2.0 / (a * a * a));
  v -= scaled(specfun::polygamma(1, w), 2.0 * dw / a);
  v += scaled(psi, 2.0 / (a * a));
  const RealResult zp1 = zeta_prime_H(-1, w);
  v -= scaled(zp1, 4.0);
  const RealResult lg = specfun::ln_gamma(w);
  const RealResult dzp0{-(0.5 - w) + lg.value - 0.5 * Constants::log_2pi, lg.abs_err};
  v -= scaled(dzp0, 4.0 * a * dw);
  v += scaled(zeta_prime_H(-2, w), 4.0 * a);
  // d/dw zeta_H'(-2, w) = -zeta_H(-1, w) + 2 zeta_H'(-1, w), zeta_H(-1, w) = -B_2(w)/2
  const double zm1 = -0.5 * (w * w - w + 1.0 / 6.0);
  v += scaled(RealResult{-zm1, 0.0} + scaled(zp1, 2.0), 2.0 * a * a * dw);

  auto U = [&](double y) { return Complex(1.0, y) / a + 1.0; };
  auto dU = [&](double y) { return -Complex(1.0, y) / (a * a); };
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g = specfun::polygamma(0, U(y));
                    const Complex f = Complex(1.0, y) * dU(y);
                    return ComplexResult{f * g.value, std::abs(f) * g.abs_err};
                  },
                  opts),
              4.0);
  v -= scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g = specfun::hurwitz_zeta(2.0, U(y));
                    return ComplexResult{Complex(1.0, y) * g.value, std::hypot(1.0, y) * g.abs_err};
                  },
                  opts),
              4.0 / (a * a * a));
  v += scaled(plana_im(
                  [&](double y) {
                    const ComplexResult g = specfun::hurwitz_zeta(3.0, U(y));
                    const Complex f = -2.0 * Complex(1.0, y) * dU(y);
                    return ComplexResult{f * g.value, std::abs(f) * g.abs_err};
                  },
                  opts),
              2.0 / (a * a));
  v -= scaled(log_fredholm_slope(1, a, 0.0, -1.0, opts), 2.0);
  return v;
}

}  // namespace

double zeta0(int dim, double a) {
  check(dim, a);
  return dim == 2 ? -1.0 + a / 6.0 + 1.0 / (6.0 * a) : -1.0;
}

RealResult zeta_prime_shift_form(int dim, double a, const EvalOptions& opts) {
  check(dim, a);
  return dim == 2 ? shift_form_2(a, opts) : shift_form_3(a, opts);
}

RealResult zeta_prime_square_form(int dim, double a, const EvalOptions& opts) {
  check(dim, a);
  return dim == 2 ? square_form_2(a, opts) : square_form_3(a, opts);
}

RealResult zeta_prime_slope(int dim, double a, const EvalOptions& opts) {
  check(dim, a);
  return dim == 2 ? slope_2(a, opts) : slope_3(a, opts);
}

}  // namespace lunezeta::closed_forms
