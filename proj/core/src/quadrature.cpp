#include <lunezeta/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <queue>
#include <vector>

namespace lunezeta {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEps = 2.220446049250313e-16;

// Kronrod 15 / Gauss 7 nodes and weights (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double mag(double x) { return std::abs(x); }
double mag(const Complex& z) { return std::abs(z); }

template <typename T>
struct Panel {
  double lo;
  double hi;
  T value;
  double err;
  double resabs;
  bool operator<(const Panel& o) const { return err < o.err; }
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::array<T, 15> fv;
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  T resk = fv[7] * kWgk[7];
  T resg = fv[7] * kWg[3];
  double resabs = mag(fv[7]) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    resk += (fv[j] + fv[14 - j]) * kWgk[j];
    resabs += (mag(fv[j]) + mag(fv[14 - j])) * kWgk[j];
    if (j % 2 == 1) resg += (fv[j] + fv[14 - j]) * kWg[j / 2];
  }
  const T mean = resk * 0.5;
  double resasc = kWgk[7] * mag(fv[7] - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (mag(fv[j] - mean) + mag(fv[14 - j] - mean));

  resk *= half;
  resasc *= std::abs(half);
  resabs *= std::abs(half);
  double err = mag((resk - resg * half));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > 1e-290 / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {lo, hi, resk, err, resabs};
}

template <typename T, typename F>
EvalResult<T> adaptive(const F& f, const std::vector<double>& breaks, const QuadratureConfig& cfg) {
  std::priority_queue<Panel<T>> heap;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) heap.push(gk15<T>(f, breaks[i], breaks[i + 1]));
  }
  if (heap.empty()) return {T{}, 0.0};
  double err = 0.0;
  double abs_sum = 0.0;
  {
    auto copy = heap;
    while (!copy.empty()) {
      err += copy.top().err;
      abs_sum += copy.top().resabs;
      copy.pop();
    }
  }
  while (true) {
    // Each panel already carries a 50 eps * resabs rounding term.
    const double floor = std::max(100.0 * kEps, cfg.relative_floor) * abs_sum;
    if (err <= cfg.target_abs_err || err <= floor) {
      // Re-sum exactly, smallest contributions first.
      std::vector<Panel<T>> panels;
      while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
      }
      T sum{};
      double total_err = 0.0;
      for (auto it = panels.rbegin(); it != panels.rend(); ++it) {
        sum += it->value;
        total_err += it->err;
      }
      return {sum, total_err + kEps * abs_sum};
    }
    if (static_cast<int>(heap.size()) >= cfg.max_panels) break;
    Panel<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    Panel<T> left = gk15<T>(f, worst.lo, mid);
    Panel<T> right = gk15<T>(f, mid, worst.hi);
    err += left.err + right.err - worst.err;
    abs_sum += left.resabs + right.resabs - worst.resabs;
    err = std::max(err, 0.0);
    heap.push(left);
    heap.push(right);
  }
  throw ConvergenceError("quadrature: panel budget exhausted with error estimate " + fmt_g(err) + " (abs sum " + fmt_g(abs_sum) + ")" +
                         " above target " + fmt_g(cfg.target_abs_err));
}

template <typename T>
EvalResult<T> plana_impl(const BasicPlanaIntegrand<T>& integrand, const QuadratureConfig& cfg) {
  if (!(cfg.target_abs_err > 0.0)) throw DomainError("plana_integral: target_abs_err must be positive");
  const auto& f = integrand.f;

  double sup = 0.0;
  for (int i = 1; i <= 48; ++i) sup = std::max(sup, mag(f(0.25 * i)));
  if (sup == 0.0) return {T{}, 0.0};
  // Sharply peaked integrands (large s) have a steep linear start, so also
  // accept a value at 1e-8 that scales linearly against the one at 1e-5.
  if (integrand.vanishes_at_zero && mag(f(1e-8)) > 1e-6 * sup && mag(f(1e-8)) > 2e-3 * mag(f(1e-5))) {
    throw DomainError("plana_integral: integrand does not vanish at y = 0");
  }

  double cutoff = cfg.cutoff_Y;
  if (cutoff <= 0.0) {
    cutoff = std::log(sup / (0.01 * cfg.target_abs_err)) / (2.0 * kPi);
    cutoff = std::clamp(cutoff, 1.0, 12.0);
  }

  constexpr double kOffset = 1e-12;
  auto weighted = [&f](double y) { return f(y) / std::expm1(2.0 * kPi * y); };
  std::vector<double> breaks = {kOffset};
  for (double b = 0.25; b < cutoff; b *= 2.0) breaks.push_back(b);
  breaks.push_back(cutoff);

  // Leave room in the target for the head and tail pieces.
  QuadratureConfig inner = cfg;
  inner.target_abs_err = 0.5 * cfg.target_abs_err;
  EvalResult<T> r = adaptive<T>(weighted, breaks, inner);

  const double decay = std::exp(-2.0 * kPi * cutoff);
  const double tail_sup = std::max(mag(f(cutoff)), mag(f(cutoff + 1.0)));
  const double tail = 2.0 * tail_sup * decay / (2.0 * kPi * (1.0 - decay));
  // On [0, offset] the weighted integrand is constant to O(offset).
  const T head = weighted(kOffset) * kOffset;
  r.value += head;
  r.abs_err += tail + mag(head) * kOffset;
  return r;
}

}  // namespace

RealResult plana_integral(const PlanaIntegrand& f, const QuadratureConfig& cfg) { return plana_impl(f, cfg); }

ComplexResult plana_integral(const ComplexPlanaIntegrand& f, const QuadratureConfig& cfg) {
  return plana_impl(f, cfg);
}

RealResult integrate(const std::function<double(double)>& f, double lo, double hi, const QuadratureConfig& cfg) {
  if (!(hi >= lo)) throw DomainError("integrate: requires lo <= hi");
  if (hi == lo) return {0.0, 0.0};
  return adaptive<double>(f, {lo, hi}, cfg);
}

RealResult integrate_to_infinity(const std::function<double(double)>& f, double lo, const QuadratureConfig& cfg) {
  auto g = [&f, lo](double u) {
    const double one_minus = 1.0 - u;
    const double t = lo + u / one_minus;
    return f(t) / (one_minus * one_minus);
  };
  // The open GK rule never evaluates the endpoint u = 1.
  return adaptive<double>(g, {0.0, 0.5, 0.75, 0.875, 1.0}, cfg);
}

}  // namespace lunezeta
