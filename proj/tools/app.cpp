#include "app.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <thread>

namespace lunezeta::app {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw UsageError("config: " + key + " is not a number: " + v);
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "on" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "off" || v == "no") return false;
  throw UsageError("config: " + key + " must be true or false, got " + v);
}

}  // namespace

EvalOptions load_config(const std::string& path, EvalOptions base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "target_abs_err") {
      const double t = parse_double(key, value);
      if (!(t > 0.0)) throw UsageError("config: target_abs_err must be positive");
      base.quad.target_abs_err = t;
    } else if (key == "compensated") {
      base.compensated = parse_bool(key, value);
    } else {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  return base;
}

Route parse_route(const std::string& name) {
  if (name == "a" || name == "A") return Route::A;
  if (name == "b" || name == "B") return Route::B;
  if (name == "both") return Route::Both;
  throw UsageError("route must be a, b or both");
}

std::string route_name(Route r) {
  switch (r) {
    case Route::A:
      return "a";
    case Route::B:
      return "b";
    case Route::Both:
      break;
  }
  return "both";
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<SweepRow> run_sweep(int dim, double k_min, double k_max, int steps, Route route,
                                const EvalOptions& opts, int jobs) {
  if (steps < 1) throw UsageError("steps must be at least 1");
  if (!(k_min > 0.0 && k_min <= k_max && k_max <= 1.0)) throw UsageError("need 0 < k-min <= k-max <= 1");
  std::vector<SweepRow> rows(steps);
  for (int i = 0; i < steps; ++i) {
    rows[i].k = steps == 1 ? k_min : k_min + (k_max - k_min) * i / (steps - 1);
    if (i == steps - 1) rows[i].k = k_max;
  }

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < steps; i = next++) {
      SweepRow& row = rows[i];
      try {
        const DeformedSphere s = DeformedSphere::from_k(dim, row.k);
        row.a = s.a;
        row.omega = std::numbers::pi / s.a;
        const ZetaInvariants inv = zeta_invariants(s, route, opts);
        row.zeta0 = inv.zeta0.value;
        row.zeta0_prime = inv.zeta0_prime.value;
        row.zeta0_prime_err = inv.zeta0_prime.abs_err;
        row.det = inv.det.value;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const int n = std::clamp(jobs, 1, steps);
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "k,omega,a,zeta0,zeta0_prime,zeta0_prime_err,det,error\r\n";
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) {
      os << fmt(r.k) << ",,,,,,," << csv_field(r.error) << "\r\n";
      continue;
    }
    os << fmt(r.k) << ',' << fmt(r.omega) << ',' << fmt(r.a) << ',' << fmt(r.zeta0) << ',' << fmt(r.zeta0_prime)
       << ',' << fmt(r.zeta0_prime_err) << ',' << fmt(r.det) << ",\r\n";
  }
}

void write_sweep_json(std::ostream& os, const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    nlohmann::json j{{"k", r.k}};
    if (r.error.empty()) {
      j["omega"] = r.omega;
      j["a"] = r.a;
      j["zeta0"] = r.zeta0;
      j["zeta0_prime"] = r.zeta0_prime;
      j["zeta0_prime_err"] = r.zeta0_prime_err;
      j["det"] = r.det;
      j["error"] = nullptr;
    } else {
      j["error"] = r.error;
    }
    out.push_back(j);
  }
  os << out.dump(2) << '\n';
}

}  // namespace lunezeta::app
