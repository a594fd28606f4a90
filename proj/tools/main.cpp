// lunezeta: zeta invariants of deformed spheres from the command line.
//
// Exit codes: 0 success, 1 other failure or a failed verification,
// 2 domain or usage error, 3 route disagreement.

#include "app.hpp"
#include "verify.hpp"

#include <lunezeta/eval_result.hpp>
#include <lunezeta/geometry.hpp>
#include <lunezeta/spheres.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <numbers>
#include <optional>
#include <thread>

using namespace lunezeta;
using nlohmann::json;

namespace {

struct Common {
  std::string config;
  std::optional<double> tol;
  std::string format = "csv";
  int jobs = 0;
};

EvalOptions resolve_options(const Common& c) {
  EvalOptions opts;
  if (!c.config.empty()) opts = app::load_config(c.config, opts);
  if (c.tol) {
    if (!(*c.tol > 0.0)) throw app::UsageError("--tol must be positive");
    opts.quad.target_abs_err = *c.tol;
  }
  return opts;
}

int jobs_or_default(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

int cmd_compute(int dim, double k, const std::string& route, const Common& c) {
  const EvalOptions opts = resolve_options(c);
  const Route r = app::parse_route(route);
  const DeformedSphere s = DeformedSphere::from_k(dim, k);
  const ZetaInvariants inv = zeta_invariants(s, r, opts);
  json out{{"dim", dim},
           {"k", k},
           {"a", s.a},
           {"zeta0", inv.zeta0.value},
           {"zeta0_err", inv.zeta0.abs_err},
           {"zeta0_prime", inv.zeta0_prime.value},
           {"zeta0_prime_err", inv.zeta0_prime.abs_err},
           {"det", inv.det.value},
           {"det_err", inv.det.abs_err},
           {"route", app::route_name(r)}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_sweep(int dim, double k_min, double k_max, int steps, const std::string& route, const Common& c) {
  const EvalOptions opts = resolve_options(c);
  const auto rows = app::run_sweep(dim, k_min, k_max, steps, app::parse_route(route), opts, jobs_or_default(c.jobs));
  if (c.format == "json") {
    app::write_sweep_json(std::cout, rows);
  } else {
    app::write_sweep_csv(std::cout, rows);
  }
  for (const auto& r : rows) {
    if (!r.error.empty()) std::cerr << "k=" << app::fmt(r.k) << ": " << r.error << '\n';
  }
  return 0;
}

int cmd_spectrum(int dim, double k, int count, const Common& c) {
  const auto spec = enumerate_spectrum(DeformedSphere::from_k(dim, k), count);
  if (c.format == "json") {
    json out = json::array();
    for (const auto& e : spec) out.push_back({{"eigenvalue", e.eigenvalue}, {"multiplicity", e.multiplicity}});
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "eigenvalue,multiplicity\r\n";
  for (const auto& e : spec) std::cout << app::fmt(e.eigenvalue) << ',' << app::fmt(e.multiplicity) << "\r\n";
  return 0;
}

int cmd_profile(double k, int samples, const Common& c) {
  const auto pts = profile(k, samples);
  if (c.format == "json") {
    json out = json::array();
    for (const auto& p : pts) out.push_back({{"theta", p.theta}, {"x", p.x}, {"z", p.z}});
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "theta,x,z\r\n";
  for (const auto& p : pts) std::cout << app::fmt(p.theta) << ',' << app::fmt(p.x) << ',' << app::fmt(p.z) << "\r\n";
  return 0;
}

int cmd_verify(const std::string& level, const std::vector<int>& only, double eps, const std::string& figure,
               const Common& c) {
  app::VerifyOptions vo;
  vo.eval = resolve_options(c);
  vo.det_target_eps = eps;
  vo.figure_csv = figure;
  vo.jobs = jobs_or_default(c.jobs);
  std::vector<int> ids = level == "quick" ? app::quick_criteria() : app::all_criteria();
  if (!only.empty()) ids = only;
  int failed = 0;
  for (int id : ids) {
    const app::CriterionResult r = app::run_criterion(id, vo);
    std::cout << app::format_result(r) << '\n' << std::flush;
    if (!r.passed) ++failed;
  }
  std::cout << (ids.size() - failed) << "/" << ids.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Zeta-regularised determinants of Laplacians on deformed spheres"};
  cli.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "key=value file (target_abs_err, compensated)");
    sub->add_option("--tol", common.tol, "target absolute error, overrides the config file");
  };

  int dim = 2;
  double k = 1.0;
  double k_min = 0.1;
  double k_max = 1.0;
  int steps = 10;
  int count = 10;
  int samples = 101;
  std::string route = "a";
  const std::vector<std::string> routes{"a", "b", "both"};
  const std::vector<std::string> formats{"csv", "json"};

  auto* compute = cli.add_subcommand("compute", "zeta(0), zeta'(0) and det as JSON");
  compute->add_option("--dim", dim, "sphere dimension N+1")->check(CLI::Range(2, kMaxSphereDim));
  compute->add_option("--k", k, "deformation parameter in (0, 1]");
  compute->add_option("--route", route)->check(CLI::IsMember(routes));
  add_common(compute);

  auto* sweep = cli.add_subcommand("sweep", "invariants over a k grid");
  sweep->add_option("--dim", dim)->check(CLI::Range(2, kMaxSphereDim));
  sweep->add_option("--k-min", k_min);
  sweep->add_option("--k-max", k_max);
  sweep->add_option("--steps", steps)->check(CLI::PositiveNumber);
  sweep->add_option("--route", route)->check(CLI::IsMember(routes));
  sweep->add_option("--format", common.format)->check(CLI::IsMember(formats));
  sweep->add_option("--jobs", common.jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  add_common(sweep);

  auto* spectrum = cli.add_subcommand("spectrum", "first eigenvalues with multiplicities");
  spectrum->add_option("--dim", dim)->check(CLI::Range(2, kMaxSphereDim));
  spectrum->add_option("--k", k);
  spectrum->add_option("--count", count)->check(CLI::PositiveNumber);
  spectrum->add_option("--format", common.format)->check(CLI::IsMember(formats));
  add_common(spectrum);

  auto* prof = cli.add_subcommand("profile", "generatrix of the surface of revolution");
  prof->add_option("--k", k);
  prof->add_option("--samples", samples)->check(CLI::Range(2, 10000000));
  prof->add_option("--format", common.format)->check(CLI::IsMember(formats));
  add_common(prof);

  std::string level = "quick";
  std::vector<int> only;
  double inject = 0.0;
  std::string figure;
  auto* verify = cli.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--only", only, "run only these criterion ids");
  verify->add_option("--inject-det-eps", inject, "relative perturbation of determinant targets");
  verify->add_option("--figure-csv", figure, "write the criterion 16 sweep here");
  verify->add_option("--jobs", common.jobs)->check(CLI::NonNegativeNumber);
  add_common(verify);

  CLI11_PARSE(cli, argc, argv);

  try {
    if (*compute) return cmd_compute(dim, k, route, common);
    if (*sweep) return cmd_sweep(dim, k_min, k_max, steps, route, common);
    if (*spectrum) return cmd_spectrum(dim, k, count, common);
    if (*prof) return cmd_profile(k, samples, common);
    if (*verify) return cmd_verify(level, only, inject, figure, common);
  } catch (const RouteDisagreement& e) {
    std::cerr << "route disagreement: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const PoleError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const app::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
