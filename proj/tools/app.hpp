#pragma once

// Shared plumbing for the lunezeta command-line tool and the acceptance
// runner: configuration files, number formatting, sweeps.

#include <lunezeta/options.hpp>
#include <lunezeta/spheres.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace lunezeta::app {

/// Raised for unreadable or malformed configuration and bad flag values.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Reads key=value lines (blank lines and '#' comments ignored). Recognised
/// keys: target_abs_err, compensated. Unknown keys are an error.
EvalOptions load_config(const std::string& path, EvalOptions base = {});

Route parse_route(const std::string& name);
std::string route_name(Route r);

/// Shortest round-trip decimal form; independent of the C locale.
std::string fmt(double v);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

struct SweepRow {
  double k = 0.0;
  double omega = 0.0;
  double a = 0.0;
  double zeta0 = 0.0;
  double zeta0_prime = 0.0;
  double zeta0_prime_err = 0.0;
  double det = 0.0;
  std::string error;  // empty when the row was computed
};

/// Uniform k grid from k_min to k_max with `steps` points. Rows are
/// evaluated on up to `jobs` threads and returned in k order.
std::vector<SweepRow> run_sweep(int dim, double k_min, double k_max, int steps, Route route,
                                const EvalOptions& opts, int jobs);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace lunezeta::app
