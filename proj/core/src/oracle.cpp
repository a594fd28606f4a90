#include <lunezeta/oracle.hpp>
#include <lunezeta/quadrature.hpp>
#include <lunezeta/summation.hpp>

#include <cmath>
#include <functional>

namespace lunezeta::oracle {

namespace {

using Fn = std::function<double(double)>;

struct Level {
  int direct;  // terms summed one by one in each direction
};

constexpr Level kCoarse{32};
constexpr Level kFine{64};

double central_diff(const Fn& f, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// sum_{n >= first} f(n): direct up to first + count - 1, then the
// Euler-Maclaurin tail int_V^inf f + f(V)/2 - f'(V)/12.
RealResult em_sum(const Fn& f, int first, int count) {
  Accumulator<double> acc(true);
  for (int n = first; n < first + count; ++n) acc += f(n);
  const double V = first + count;
  const RealResult tail = integrate_to_infinity(f, V);
  acc += tail.value;
  acc += 0.5 * f(V);
  acc += -central_diff(f, V) / 12.0;
  return {acc.value(), tail.abs_err + acc.rounding_bound()};
}

// sum_{m >= 1} sum_{n >= n0} g(a m, n), with Euler-Maclaurin tails in both indices.
RealResult lattice_sum(const std::function<double(double, double)>& g, double a, int n0, Level level) {
  double inner_err = 0.0;
  const Fn column = [&](double m) {
    const RealResult r = em_sum([&](double n) { return g(a * m, n); }, n0, level.direct);
    inner_err += r.abs_err;
    return r.value;
  };
  const RealResult outer = em_sum(column, 1, level.direct);
  // inner_err sums over every column evaluation, quadrature nodes included,
  // which over-counts the weighted contributions; it is a safe bound.
  return {outer.value, outer.abs_err + inner_err};
}

RealResult two_levels(const std::function<RealResult(Level)>& at) {
  const RealResult coarse = at(kCoarse);
  const RealResult fine = at(kFine);
  return {fine.value, std::abs(fine.value - coarse.value) + fine.abs_err};
}

double binomial_weight(double nu, int N) {
  double w = 1.0;
  for (int i = 1; i <= N - 1; ++i) w *= (nu + i) / i;
  return w;
}

// log(1+u) - sum_{j=1}^q (-1)^{j-1} u^j / j without cancellation for small u.
double regularised_log1p(double u, int q) {
  if (std::abs(u) >= 0.1) {
    double v = std::log1p(u);
    double up = 1.0;
    for (int j = 1; j <= q; ++j) {
      up *= u;
      v -= ((j % 2 == 1) ? 1.0 : -1.0) * up / j;
    }
    return v;
  }
  double v = 0.0;
  double up = std::pow(u, q);
  for (int j = q + 1; j < q + 60; ++j) {
    up *= u;
    const double term = ((j % 2 == 1) ? 1.0 : -1.0) * up / j;
    v += term;
    if (std::abs(term) < 1e-19 * std::abs(v)) break;
  }
  return v;
}

}  // namespace

RealResult brute_zeta(const DeformedSphere& sphere, double s) {
  if (!(s > sphere.dim)) throw DomainError("brute_zeta: requires s > dim");
  const int N = sphere.N();
  auto g = [N, s](double c, double nu) {
    const double t = c + nu;
    return binomial_weight(nu, N) * std::pow(t * (t + N), -s);
  };
  return two_levels([&](Level level) {
    RealResult v = em_sum([&](double nu) { return g(0.0, nu); }, 1, level.direct);
    v += scaled(lattice_sum(g, sphere.a, 0, level), 2.0);
    return v;
  });
}

RealResult brute_double_zeta(const DoubleZetaParams& params, double s) {
  params.validate();
  if (!(s > (params.alpha + 2.0) / 2.0)) throw DomainError("brute_double_zeta: requires s > (alpha + 2) / 2");
  auto g = [&params, s](double c, double n) {
    const double t = c + n + params.x;
    return std::pow(n, params.alpha) * std::pow(t * t + params.p, -s);
  };
  return two_levels([&](Level level) { return lattice_sum(g, params.a, 1, level); });
}

RealResult brute_log_product(const DoubleZetaParams& params) {
  params.validate();
  if (params.p == 0.0) return {0.0, 0.0};
  const int q = (params.alpha + 2) / 2;
  auto g = [&params, q](double c, double n) {
    const double t = c + n + params.x;
    return std::pow(n, params.alpha) * regularised_log1p(params.p / (t * t), q);
  };
  return two_levels([&](Level level) { return lattice_sum(g, params.a, 1, level); });
}

RealResult brute_single_log_product() {
  const Fn f = [](double n) { return n * regularised_log1p(-1.0 / (n * n), 1); };
  const RealResult coarse = em_sum(f, 2, 500);
  const RealResult fine = em_sum(f, 2, 2000);
  return {fine.value, std::abs(fine.value - coarse.value) + fine.abs_err};
}

DerivativeEstimate finite_difference_check(const std::function<double(double)>& fn, double point, double h) {
  const double fp1 = fn(point + h);
  const double fm1 = fn(point - h);
  const double fp2 = fn(point + 2.0 * h);
  const double fm2 = fn(point - 2.0 * h);
  const double d3 = (fp1 - fm1) / (2.0 * h);
  const double d5 = (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
  return {d5, std::abs(d5 - d3)};
}

}  // namespace lunezeta::oracle
