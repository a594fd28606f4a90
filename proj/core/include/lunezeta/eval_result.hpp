#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace lunezeta {

using Complex = std::complex<double>;

/// A computed value paired with an upper-bound estimate of its absolute
/// error (truncation plus accumulated rounding).
template <typename T>
struct EvalResult {
  T value{};
  double abs_err = 0.0;

  EvalResult() = default;
  EvalResult(T v, double err) : value(v), abs_err(err) {}

  EvalResult& operator+=(const EvalResult& o) {
    value += o.value;
    abs_err += o.abs_err;
    return *this;
  }
  EvalResult& operator-=(const EvalResult& o) {
    value -= o.value;
    abs_err += o.abs_err;
    return *this;
  }
  friend EvalResult operator+(EvalResult a, const EvalResult& b) { return a += b; }
  friend EvalResult operator-(EvalResult a, const EvalResult& b) { return a -= b; }

  /// Scale by an exactly known factor.
  template <typename S>
  friend EvalResult scaled(const EvalResult& a, S factor) {
    return {static_cast<T>(a.value * factor), a.abs_err * std::abs(factor)};
  }
};

using RealResult = EvalResult<double>;
using ComplexResult = EvalResult<Complex>;

inline RealResult real_part(const ComplexResult& r) { return {r.value.real(), r.abs_err}; }

// Error hierarchy. Everything thrown by the library derives from Error.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies on a pole (Gamma at non-positive integers, zeta at s = 1, ...).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative or adaptive procedure exhausted its budget before reaching
/// the requested accuracy, or a series is outside its convergence disk.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes disagree beyond their combined error.
class RouteDisagreement : public Error {
 public:
  RouteDisagreement(const std::string& what, double a, double b, double tol)
      : Error(what + ": " + std::to_string(a) + " vs " + std::to_string(b) + " (tol " +
              std::to_string(tol) + ")"),
        first(a),
        second(b),
        tolerance(tol) {}
  double first;
  double second;
  double tolerance;
};

/// Imaginary parts that must cancel in a real-valued assembly did not.
class ResidualImaginaryError : public Error {
 public:
  using Error::Error;
};

}  // namespace lunezeta
