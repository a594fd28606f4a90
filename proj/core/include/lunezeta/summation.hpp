#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace lunezeta {

namespace detail {
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& z) { return std::abs(z.real()) + std::abs(z.imag()); }

inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}
}  // namespace detail

/// Running sum with optional Neumaier compensation. Also tracks the sum of
/// magnitudes so callers can form a rounding-error bound.
template <typename T>
class Accumulator {
 public:
  explicit Accumulator(bool compensated = true) : compensated_(compensated) {}

  void add(const T& x) {
    abs_sum_ += detail::magnitude(x);
    if (!compensated_) {
      sum_ += x;
      return;
    }
    if constexpr (std::is_same_v<T, double>) {
      double s, e;
      detail::two_sum(sum_, x, s, e);
      sum_ = s;
      carry_ += e;
    } else {
      double sr, er, si, ei;
      detail::two_sum(sum_.real(), x.real(), sr, er);
      detail::two_sum(sum_.imag(), x.imag(), si, ei);
      sum_ = T(sr, si);
      carry_ += T(er, ei);
    }
  }
  Accumulator& operator+=(const T& x) {
    add(x);
    return *this;
  }

  T value() const { return sum_ + carry_; }
  double magnitude_sum() const { return abs_sum_; }

  /// Bound on the rounding error accumulated so far.
  double rounding_bound() const {
    constexpr double eps = 2.220446049250313e-16;
    return compensated_ ? 2.0 * eps * (detail::magnitude(value()) + eps * abs_sum_) + 1e-300
                        : eps * abs_sum_;
  }

 private:
  bool compensated_;
  T sum_{};
  T carry_{};
  double abs_sum_ = 0.0;
};

}  // namespace lunezeta
