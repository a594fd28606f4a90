#pragma once

// The deformed 2-sphere as a surface of revolution: its generatrix is
// parameterised by arc length theta as x = k sin(theta), z = E(pi/2 - theta, k).

#include <lunezeta/eval_result.hpp>

#include <iosfwd>
#include <vector>

namespace lunezeta {

/// Incomplete elliptic integral of the second kind,
/// int_0^theta sqrt(1 - k^2 sin^2 psi) d psi, for theta in [0, pi/2] and k in [0, 1].
RealResult elliptic_E(double theta, double k);

struct ProfilePoint {
  double theta;
  double x;
  double z;
};

/// `samples` points on a uniform theta grid over [0, pi/2], k in (0, 1].
std::vector<ProfilePoint> profile(double k, int samples);

/// Writes "theta,x,z" followed by one row per point.
void write_profile_csv(std::ostream& os, const std::vector<ProfilePoint>& points);

}  // namespace lunezeta
