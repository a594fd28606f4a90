#include <lunezeta/geometry.hpp>
#include <lunezeta/quadrature.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

namespace lunezeta {

namespace {
constexpr double kHalfPi = 1.57079632679489661923132169163975144;
}

RealResult elliptic_E(double theta, double k) {
  if (!(theta >= 0.0 && theta <= kHalfPi + 1e-15)) throw DomainError("elliptic_E: theta must lie in [0, pi/2]");
  if (!(k >= 0.0 && k <= 1.0)) throw DomainError("elliptic_E: k must lie in [0, 1]");
  if (theta == 0.0) return {0.0, 0.0};
  if (k == 0.0) return {theta, 0.0};
  if (k == 1.0) return {std::sin(theta), 1e-16};
  const double k2 = k * k;
  return integrate([k2](double psi) { return std::sqrt(1.0 - k2 * std::sin(psi) * std::sin(psi)); }, 0.0, theta);
}

std::vector<ProfilePoint> profile(double k, int samples) {
  if (!(k > 0.0 && k <= 1.0)) throw DomainError("profile: k must lie in (0, 1]");
  if (samples < 2) throw DomainError("profile: need at least two samples");
  std::vector<ProfilePoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double theta = (i == samples - 1) ? kHalfPi : kHalfPi * i / (samples - 1);
    const double rest = (i == samples - 1) ? 0.0 : kHalfPi - theta;
    out.push_back({theta, k * std::sin(theta), elliptic_E(rest, k).value});
  }
  return out;
}

void write_profile_csv(std::ostream& os, const std::vector<ProfilePoint>& points) {
  os << "theta,x,z\n";
  char buf[96];
  for (const ProfilePoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.theta, p.x, p.z);
    os << buf;
  }
}

}  // namespace lunezeta
