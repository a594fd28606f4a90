#include <lunezeta/specfun.hpp>
#include <lunezeta/summation.hpp>

#include <array>
#include <cmath>
#include <string>

namespace lunezeta::specfun {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// B_0, B_2, ..., B_30
constexpr std::array<double, 16> kBernoulliEven = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// Number of Bernoulli correction terms used by the asymptotic series.
constexpr int kOrder = 12;

// Shift target for the recurrence: asymptotic series are evaluated at
// Re(w) >= kShift.
constexpr double kShift = 15.0;
constexpr double kShiftNonpositive = 8.0;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double mag(double x) { return std::abs(x); }
double mag(const Complex& z) { return std::abs(z); }

bool is_nonpositive_integer(const Complex& z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

int shift_count(double re, double target) {
  return re >= target ? 0 : static_cast<int>(std::ceil(target - re));
}

template <typename T>
EvalResult<T> hurwitz_impl(double s, T x, bool derivative) {
  if (s == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (std::real(x) <= 0.0) throw DomainError("hurwitz_zeta: requires Re x > 0");

  // Large positive s needs a longer shift for the Bernoulli tail to decay;
  // for s <= 0 the direct sum cancels, so the shift is kept short.
  const double target = s > 0.0 ? kShift + s : kShiftNonpositive - s;
  const int m = shift_count(std::real(x), target);
  Accumulator<T> acc;
  for (int k = 0; k < m; ++k) {
    const T lg = std::log(x + static_cast<double>(k));
    const T t = std::exp(-s * lg);
    acc += derivative ? T(-lg * t) : t;
  }

  const T w = x + static_cast<double>(m);
  const T lw = std::log(w);
  const T wps = std::exp(-s * lw);  // w^{-s}
  const double sm1 = s - 1.0;
  if (derivative) {
    acc += T(w * wps * (-lw / sm1 - 1.0 / (sm1 * sm1)));
    acc += T(-0.5 * lw * wps);
  } else {
    acc += T(w * wps / sm1);
    acc += T(0.5 * wps);
  }

  // Euler-Maclaurin corrections B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}.
  const T winv2 = T(1.0) / (w * w);
  T wpow = T(1.0) / w;  // w^{1-2j}
  double poly = s;      // (s)_{2j-1}
  double dpoly = 1.0;
  T next{};
  for (int j = 1; j <= kOrder + 1; ++j) {
    const double c = kBernoulliEven[j] / factorial(2 * j);
    const T term = derivative ? T(c * (dpoly - poly * lw) * wps * wpow) : T(c * poly * wps * wpow);
    if (j <= kOrder) {
      acc += term;
    } else {
      next = term;
    }
    const double q = (s + 2 * j - 1) * (s + 2 * j);
    const double dq = 2.0 * s + 4.0 * j - 1.0;
    dpoly = dpoly * q + poly * dq;
    poly *= q;
    wpow *= winv2;
  }
  const double err = 2.0 * mag(next) + 4.0 * kEps * acc.magnitude_sum() + acc.rounding_bound();
  return {acc.value(), err};
}

ComplexResult ln_gamma_impl(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("ln_gamma: pole at z = " + std::to_string(z.real()));
  }
  const int m = shift_count(z.real(), kShift);
  Accumulator<Complex> shifts;
  for (int k = 0; k < m; ++k) shifts += std::log(z + static_cast<double>(k));

  const Complex w = z + static_cast<double>(m);
  const Complex lw = std::log(w);
  Accumulator<Complex> acc;
  acc += (w - 0.5) * lw;
  acc += -w;
  acc += Complex(0.5 * Constants::log_2pi, 0.0);
  const Complex winv = 1.0 / w;
  const Complex winv2 = winv * winv;
  Complex wpow = winv;  // w^{1-2j}
  Complex next{};
  for (int j = 1; j <= kOrder + 1; ++j) {
    const Complex term = kBernoulliEven[j] / (2.0 * j * (2.0 * j - 1.0)) * wpow;
    if (j <= kOrder) {
      acc += term;
    } else {
      next = term;
    }
    wpow *= winv2;
  }
  const Complex value = acc.value() - shifts.value();
  const double err = 2.0 * std::abs(next) + 4.0 * kEps * (acc.magnitude_sum() + shifts.magnitude_sum());
  return {value, err};
}

ComplexResult polygamma_impl(int k, Complex z) {
  if (k < 0 || k > 2) throw DomainError("polygamma: order must be 0, 1 or 2");
  if (is_nonpositive_integer(z)) {
    throw PoleError("polygamma: pole at z = " + std::to_string(z.real()));
  }
  const int m = shift_count(z.real(), kShift);
  Accumulator<Complex> shifts;
  for (int i = 0; i < m; ++i) {
    const Complex inv = 1.0 / (z + static_cast<double>(i));
    switch (k) {
      case 0: shifts += -inv; break;
      case 1: shifts += inv * inv; break;
      default: shifts += -2.0 * inv * inv * inv; break;
    }
  }

  const Complex w = z + static_cast<double>(m);
  const Complex winv = 1.0 / w;
  const Complex winv2 = winv * winv;
  Accumulator<Complex> acc;
  Complex next{};
  switch (k) {
    case 0: {
      acc += std::log(w);
      acc += -0.5 * winv;
      Complex wpow = winv2;  // w^{-2j}
      for (int j = 1; j <= kOrder + 1; ++j) {
        const Complex term = -kBernoulliEven[j] / (2.0 * j) * wpow;
        if (j <= kOrder) {
          acc += term;
        } else {
          next = term;
        }
        wpow *= winv2;
      }
      break;
    }
    case 1: {
      acc += winv;
      acc += 0.5 * winv2;
      Complex wpow = winv2 * winv;  // w^{-2j-1}
      for (int j = 1; j <= kOrder + 1; ++j) {
        const Complex term = kBernoulliEven[j] * wpow;
        if (j <= kOrder) {
          acc += term;
        } else {
          next = term;
        }
        wpow *= winv2;
      }
      break;
    }
    default: {
      acc += -winv2;
      acc += -winv2 * winv;
      Complex wpow = winv2 * winv2;  // w^{-2j-2}
      for (int j = 1; j <= kOrder + 1; ++j) {
        const Complex term = -(2.0 * j + 1.0) * kBernoulliEven[j] * wpow;
        if (j <= kOrder) {
          acc += term;
        } else {
          next = term;
        }
        wpow *= winv2;
      }
      break;
    }
  }
  const double err = 2.0 * std::abs(next) + 4.0 * kEps * (acc.magnitude_sum() + shifts.magnitude_sum());
  return {acc.value() + shifts.value(), err};
}

}  // namespace

double bernoulli_even(int j) {
  if (j < 0 || j >= static_cast<int>(kBernoulliEven.size())) {
    throw DomainError("bernoulli_even: index out of range");
  }
  return kBernoulliEven[j];
}

ComplexResult ln_gamma(Complex z) { return ln_gamma_impl(z); }

RealResult ln_gamma(double x) {
  // For negative non-integer x the real part is log|Gamma(x)|.
  const auto r = ln_gamma_impl(Complex(x, 0.0));
  return {r.value.real(), r.abs_err};
}

ComplexResult polygamma(int k, Complex z) { return polygamma_impl(k, z); }

RealResult polygamma(int k, double x) {
  const auto r = polygamma_impl(k, Complex(x, 0.0));
  return {r.value.real(), r.abs_err};
}

ComplexResult hurwitz_zeta(double s, Complex x) { return hurwitz_impl<Complex>(s, x, false); }
RealResult hurwitz_zeta(double s, double x) { return hurwitz_impl<double>(s, x, false); }

ComplexResult hurwitz_zeta_ds(double s, Complex x) { return hurwitz_impl<Complex>(s, x, true); }
RealResult hurwitz_zeta_ds(double s, double x) { return hurwitz_impl<double>(s, x, true); }

RealResult hurwitz_zeta_sderiv(int s0, double x) {
  if (s0 > 0) {
    throw DomainError("hurwitz_zeta_sderiv: s0 must be a non-positive integer, got " + std::to_string(s0));
  }
  if (!(x > 0.0)) throw DomainError("hurwitz_zeta_sderiv: requires x > 0");
  return hurwitz_impl<double>(static_cast<double>(s0), x, true);
}

}  // namespace lunezeta::specfun
