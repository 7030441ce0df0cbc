// Copyright 2026 The circle-npd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// circle-npd: minimax alignment distance between 2*pi-periodic functions.
//
// Exit codes:
//   0  success (for `verify`: the certificate checks out)
//   1  malformed input, unusable flags, or an internal solver failure
//   2  an input function is not Morse (degenerate critical point)
//   3  refined distance escaped the rigorous grid bracket
//   4  `verify` only: claimed optimum is uncertified or its value is wrong

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/certify.hpp"
#include "circle_npd/critical_points.hpp"
#include "circle_npd/errors.hpp"
#include "circle_npd/grid_oracle.hpp"
#include "circle_npd/json_io.hpp"
#include "circle_npd/npd.hpp"
#include "circle_npd/periodic_function.hpp"

namespace {

struct CommonOpts {
  std::size_t n_theta = 4096;
  std::size_t n_alpha = 4096;
  double tol = 1e-8;
  bool force = false;
  std::string out_path;
  std::string format;  // empty = command default
};

bool power_of_two_at_least_64(std::size_t n) { return n >= 64 && (n & (n - 1)) == 0; }

// Grid sizes must be powers of two >= 64, tolerances in (0, 1e-2); everything
// downstream (margins, measured convergence rates) assumes it.
int validate_common(const CommonOpts& o) {
  if (!power_of_two_at_least_64(o.n_theta)) {
    std::cerr << "error: --ntheta must be a power of two >= 64 (got " << o.n_theta << ")\n";
    return 1;
  }
  if (!power_of_two_at_least_64(o.n_alpha)) {
    std::cerr << "error: --nalpha must be a power of two >= 64 (got " << o.n_alpha << ")\n";
    return 1;
  }
  if (!(o.tol > 0.0) || o.tol >= 1e-2) {
    std::cerr << "error: --tol must lie in (0, 1e-2) (got " << o.tol << ")\n";
    return 1;
  }
  return 0;
}

int check_format(const CommonOpts& o, const char* command, const char* allowed) {
  if (o.format.empty() || o.format == allowed) return 0;
  std::cerr << "error: " << command << " only supports --format " << allowed << " (got "
            << o.format << ")\n";
  return 1;
}

int emit(const CommonOpts& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << o.out_path << "\n";
    return 1;
  }
  out << text;
  if (!out) {
    std::cerr << "error: short write to output file: " << o.out_path << "\n";
    return 1;
  }
  return 0;
}

void add_grid_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--ntheta", o->n_theta, "theta grid resolution (power of two >= 64)")
      ->capture_default_str();
  cmd->add_option("--nalpha", o->n_alpha, "alpha grid resolution (power of two >= 64)")
      ->capture_default_str();
}

void add_io_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--out", o->out_path, "write output to this file instead of stdout");
  cmd->add_option("--format", o->format, "output format");
}

int run_compute(const std::string& phi_path, const std::string& psi_path, const CommonOpts& o) {
  if (int rc = check_format(o, "compute", "json")) return rc;
  npd::PeriodicFunction phi = npd::load_function_spec(phi_path);
  npd::PeriodicFunction psi = npd::load_function_spec(psi_path);
  npd::NpdOptions opts;
  opts.n_theta = o.n_theta;
  opts.n_alpha = o.n_alpha;
  opts.cert_tol = o.tol;
  opts.force_non_morse = o.force;
  npd::NpdResult result = npd::compute_npd(phi, psi, opts);
  return emit(o, npd::npd_result_json(result));
}

int run_oracle(const std::string& phi_path, const std::string& psi_path, const CommonOpts& o) {
  if (int rc = check_format(o, "oracle", "json")) return rc;
  npd::PeriodicFunction phi = npd::load_function_spec(phi_path);
  npd::PeriodicFunction psi = npd::load_function_spec(psi_path);
  npd::GridOracleResult oracle = npd::grid_oracle(phi, psi, o.n_alpha, o.n_theta);
  return emit(o, npd::oracle_json(oracle));
}

int run_verify(const std::string& phi_path, const std::string& psi_path, double alpha,
               double distance, const CommonOpts& o) {
  if (int rc = check_format(o, "verify", "json")) return rc;
  npd::PeriodicFunction phi = npd::load_function_spec(phi_path);
  npd::PeriodicFunction psi = npd::load_function_spec(psi_path);
  try {
    npd::OptimalityCertificate cert =
        npd::certify(phi, psi, alpha, distance, o.tol, o.n_theta);
    if (int rc = emit(o, npd::certificate_json(cert))) return rc;
    if (!cert.certified()) {
      std::cerr << "verify: no optimality condition holds at alpha = " << alpha << "\n";
      return 4;
    }
    return 0;
  } catch (const npd::ValueMismatch& e) {
    std::cerr << "verify: claimed distance " << e.claimed << " but g(alpha) = " << e.actual
              << ": " << e.what() << "\n";
    return 4;
  }
}

int run_profile(const std::string& phi_path, const std::string& psi_path, const CommonOpts& o) {
  if (int rc = check_format(o, "profile", "csv")) return rc;
  npd::PeriodicFunction phi = npd::load_function_spec(phi_path);
  npd::PeriodicFunction psi = npd::load_function_spec(psi_path);
  npd::NpdOptions opts;
  opts.n_theta = o.n_theta;
  opts.n_alpha = o.n_alpha;
  opts.force_non_morse = o.force;
  npd::NpdResult result = npd::compute_npd(phi, psi, opts);
  return emit(o, npd::profile_csv(phi, psi, o.n_alpha, o.n_theta, result.optimal_alphas.at(0)));
}

int run_critical(const std::string& f_path, const CommonOpts& o) {
  if (!o.format.empty() && o.format != "json" && o.format != "csv") {
    std::cerr << "error: critical supports --format json or csv (got " << o.format << ")\n";
    return 1;
  }
  npd::PeriodicFunction f = npd::load_function_spec(f_path);
  std::vector<npd::CriticalPoint> points = npd::critical_points(f);
  npd::MorseReport report = npd::is_morse(f, o.tol);
  const std::string text = (o.format == "csv") ? npd::critical_report_csv(points, report)
                                               : npd::critical_report_json(points, report);
  return emit(o, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "circle-npd: minimax circular-alignment distance between 2*pi-periodic "
      "Morse functions, with optimal rotations and optimality certificates"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string phi_path;
  std::string psi_path;
  double alpha = 0.0;
  double distance = 0.0;

  CLI::App* compute = app.add_subcommand(
      "compute", "distance, bracket, all optimal rotations, certificates (JSON)");
  compute->add_option("phi", phi_path, "function spec (JSON file)")->required();
  compute->add_option("psi", psi_path, "function spec (JSON file)")->required();
  add_grid_flags(compute, &o);
  compute->add_option("--tol", o.tol, "certificate residual tolerance, in (0, 1e-2)")
      ->capture_default_str();
  compute->add_flag("--force", o.force, "proceed even if an input is not Morse");
  add_io_flags(compute, &o);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "rigorous distance bracket and surviving grid cells (JSON)");
  oracle->add_option("phi", phi_path, "function spec (JSON file)")->required();
  oracle->add_option("psi", psi_path, "function spec (JSON file)")->required();
  add_grid_flags(oracle, &o);
  add_io_flags(oracle, &o);

  CLI::App* verify = app.add_subcommand(
      "verify", "check a claimed optimum against the optimality conditions (JSON)");
  verify->add_option("phi", phi_path, "function spec (JSON file)")->required();
  verify->add_option("psi", psi_path, "function spec (JSON file)")->required();
  verify->add_option("--alpha", alpha, "claimed optimal rotation (radians)")->required();
  verify->add_option("--distance", distance, "claimed distance value")->required();
  verify->add_option("--ntheta", o.n_theta, "theta grid resolution (power of two >= 64)")
      ->capture_default_str();
  verify->add_option("--tol", o.tol, "certificate residual tolerance, in (0, 1e-2)")
      ->capture_default_str();
  add_io_flags(verify, &o);

  CLI::App* profile = app.add_subcommand(
      "profile", "plot-ready g(alpha) sweep and best-alignment overlay (CSV)");
  profile->add_option("phi", phi_path, "function spec (JSON file)")->required();
  profile->add_option("psi", psi_path, "function spec (JSON file)")->required();
  add_grid_flags(profile, &o);
  profile->add_flag("--force", o.force, "proceed even if an input is not Morse");
  add_io_flags(profile, &o);

  CLI::App* critical = app.add_subcommand(
      "critical", "critical points and Morse check of one function (JSON or CSV)");
  critical->add_option("f", phi_path, "function spec (JSON file)")->required();
  critical->add_option("--tol", o.tol, "|f''| threshold of the Morse check, in (0, 1e-2)")
      ->capture_default_str();
  add_io_flags(critical, &o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (int rc = validate_common(o)) return rc;

  try {
    if (compute->parsed()) return run_compute(phi_path, psi_path, o);
    if (oracle->parsed()) return run_oracle(phi_path, psi_path, o);
    if (verify->parsed()) return run_verify(phi_path, psi_path, alpha, distance, o);
    if (profile->parsed()) return run_profile(phi_path, psi_path, o);
    if (critical->parsed()) return run_critical(phi_path, o);
  } catch (const npd::FunctionSpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const npd::NotMorse& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (double t : e.witness_thetas) std::cerr << "  witness theta = " << t << "\n";
    std::cerr << "(pass --force to proceed anyway)\n";
    return 2;
  } catch (const npd::DegenerateRoot& e) {
    std::cerr << "error: " << e.what() << "\n  theta = " << e.theta << ", f = " << e.value
              << ", f'' = " << e.second_derivative << "\n";
    return 2;
  } catch (const npd::InconsistentOracle& e) {
    std::cerr << "error: " << e.what() << "\n  distance = " << e.distance << " outside ["
              << e.lower << ", " << e.upper << "]\n";
    return 3;
  } catch (const npd::NpdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;  // unreachable: a subcommand is required
}
