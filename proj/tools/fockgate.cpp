// Copyright 2026 The fockgate authors
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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "demos.hpp"
#include "fockgate/invariants.hpp"
#include "fockgate/json_io.hpp"
#include "fockgate/lift.hpp"

namespace {

using namespace fockgate;
using cli::RunConfig;
using nlohmann::json;

constexpr int kExitInconclusive = 0;
constexpr int kExitForbidden = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

FrameOptions frame_options(const RunConfig& config, bool with_perpendicular) {
  FrameOptions options;
  options.cap = config.cap;
  options.with_perpendicular = with_perpendicular;
  if (!config.frame_cache.empty()) options.cache_directory = config.frame_cache;
  return options;
}

// A state argument is a grammar string, a "prob: expr; ..." mixture string,
// or @file.json holding either the pure-state or the density schema.
struct StateArgument {
  std::optional<StateExpression> pure;
  std::optional<DensityMatrix> density;

  int modes() const { return pure ? pure->modes() : density->modes(); }
  int photons() const { return pure ? pure->photons() : density->photons(); }
  DensityMatrix to_density(std::int64_t cap) const {
    return pure ? DensityMatrix::from_pure(pure->to_pure_state(cap)) : *density;
  }
};

StateArgument read_state_argument(const std::string& argument, const RunConfig& config) {
  StateArgument state;
  if (!argument.empty() && argument.front() == '@') {
    const json j = read_json_file(argument.substr(1));
    if (looks_like_density_json(j))
      state.density = density_from_json(j, config.cap);
    else
      state.pure = state_expression_from_json(j);
    return state;
  }
  if (argument.find(':') != std::string::npos) {
    state.density = parse_mixture(argument, config.cap);
    return state;
  }
  state.pure = parse_state_expression(argument);
  if (state.pure->norm_warning())
    std::cerr << "note: input norm differed from 1; amplitudes were renormalized\n";
  return state;
}

std::string describe_reduced(const InvariantReport& report) {
  if (report.reduced_exact && report.reduced_exact->is_rational()) {
    const Rational value = report.reduced_exact->rational();
    std::string out = boost::multiprecision::numerator(value).str();
    if (boost::multiprecision::denominator(value) != 1)
      out += "/" + boost::multiprecision::denominator(value).str();
    return out + " (exact)";
  }
  if (report.reduced) {
    std::ostringstream out;
    out.precision(12);
    out << *report.reduced;
    return out.str();
  }
  return "n/a";
}

void print_report(const InvariantReport& report, const RunConfig& config) {
  if (config.json_output) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return;
  }
  std::cout.precision(10);
  std::cout << "I_t = " << report.tangent << "\nI_p = " << report.perpendicular
            << "\npurity = " << report.purity << "\nreduced_sum = " << describe_reduced(report)
            << "\nmethod = "
            << (report.method == InvariantReport::Method::projection ? "projection"
                                                                     : "closed_form")
            << "\n";
}

int cmd_invariant(const std::string& expression, bool closed, bool projection, bool both,
                  const RunConfig& config) {
  const StateArgument state = read_state_argument(expression, config);
  if (!closed && !projection && !both) closed = true;  // cap-exempt default

  if (state.density && !projection)
    throw DomainError("mixed states have no closed path; use --projection");

  std::optional<InvariantReport> closed_report;
  std::optional<InvariantReport> projection_report;
  if (closed || both) closed_report = invariants_closed(*state.pure);
  if (projection || both) {
    auto frame = shared_frame(state.modes(), state.photons(), frame_options(config, true));
    projection_report = invariants_projection(state.to_density(config.cap), *frame);
    if (state.pure) {
      projection_report->reduced_exact = reduced_sum_exact(*state.pure);
      projection_report->reduced = projection_report->reduced_exact
                                       ? projection_report->reduced_exact->to_double()
                                       : reduced_sum(*state.pure);
    }
  }

  if (both) {
    const double delta = std::abs(closed_report->tangent - projection_report->tangent);
    if (config.json_output) {
      const json out = {{"closed", report_to_json(*closed_report)},
                        {"projection", report_to_json(*projection_report)},
                        {"delta_I_t", delta}};
      std::cout << out.dump(2) << "\n";
    } else {
      print_report(*closed_report, config);
      print_report(*projection_report, config);
      std::cout << "delta_I_t = " << delta << "\n";
    }
    if (delta > config.tolerance) {
      std::cerr << "error: closed and projection paths disagree by " << delta << "\n";
      return kExitInternal;
    }
    return 0;
  }
  print_report(closed_report ? *closed_report : *projection_report, config);
  return 0;
}

int cmd_check(const std::string& in_text, const std::string& out_text, const RunConfig& config) {
  const StateArgument in = read_state_argument(in_text, config);
  const StateArgument out = read_state_argument(out_text, config);
  const VerdictOptions options{.tolerance = config.tolerance};

  Verdict verdict;
  if (in.pure && out.pure) {
    verdict = transition_verdict(*in.pure, *out.pure, options);
  } else {
    if (in.modes() != out.modes() || in.photons() != out.photons())
      throw ShapeMismatch("input and output states have different (m, n)");
    auto frame = shared_frame(in.modes(), in.photons(), frame_options(config, true));
    verdict =
        transition_verdict(in.to_density(config.cap), out.to_density(config.cap), *frame, options);
  }

  if (config.json_output) {
    std::cout << verdict_to_json(verdict).dump(2) << "\n";
  } else if (verdict.forbidden()) {
    std::cout.precision(10);
    std::cout << "forbidden: " << verdict.witness->quantity << " in=" << verdict.witness->lhs
              << " out=" << verdict.witness->rhs << " gap=" << verdict.witness->gap << "\n";
  } else {
    std::cout << "inconclusive: the necessary condition cannot rule this transition out\n";
  }
  return verdict.forbidden() ? kExitForbidden : kExitInconclusive;
}

int cmd_lift(const std::string& s_file, int photons, const std::string& out_file,
             bool check_oracle, const RunConfig& config) {
  const ScatteringMatrix scattering(matrix_from_json(read_json_file(s_file)));
  const LiftedUnitary lifted = photonic_lift(scattering, photons, config.cap);

  const json out = matrix_to_json(lifted.matrix);
  if (out_file.empty() || out_file == "-") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream file(out_file);
    if (!file) throw Error("cannot open " + out_file + " for writing");
    file << out.dump(2) << "\n";
    std::cerr << "wrote " << lifted.matrix.rows() << "x" << lifted.matrix.cols() << " unitary to "
              << out_file << "\n";
  }

  if (check_oracle) {
    auto basis = FockBasis::enumerate(scattering.modes(), photons, config.cap);
    const LiftedUnitary permanents = lift_via_permanents(scattering, *basis);
    const double deviation = (lifted.matrix - permanents.matrix).cwiseAbs().maxCoeff();
    std::cerr << "permanent-oracle max deviation: " << deviation << "\n";
    if (deviation > 1e-8) {
      std::cerr << "error: exponential and permanent routes disagree\n";
      return kExitInternal;
    }
  }
  return 0;
}

int cmd_in_image(const std::string& u_file, int modes, int photons, const RunConfig& config) {
  const Eigen::MatrixXcd u = matrix_from_json(read_json_file(u_file));
  auto frame = shared_frame(modes, photons, frame_options(config, false));
  const AdjointTestResult result = is_optical_realization(u, *frame);
  if (config.json_output) {
    const json out = {{"member", result.member}, {"residual", result.residual}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (result.member ? "member" : "non-member") << " residual=" << result.residual
              << "\n";
  }
  return result.member ? kExitInconclusive : kExitForbidden;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear-optics feasibility toolkit: conserved tangent/perpendicular invariants "
               "of n-photon interferometer evolutions"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string output = "text";
  app.add_option("--tolerance", config.tolerance, "comparison tolerance for verdicts and paths")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", config.cap, "largest allowed Fock-space dimension for dense paths")
      ->check(CLI::Range(static_cast<std::int64_t>(2), static_cast<std::int64_t>(1) << 40));
  app.add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", config.seed, "seed for randomized demo rows");
  app.add_option("--frame-cache", config.frame_cache, "directory for on-disk frame reuse");

  int dim_m = 0, dim_n = 0;
  auto* dim = app.add_subcommand("dim", "dimension of the n-photon m-mode state space");
  dim->add_option("m", dim_m, "mode count")->required();
  dim->add_option("n", dim_n, "photon count")->required();

  int basis_m = 0, basis_n = 0;
  auto* basis_cmd = app.add_subcommand("basis", "list the number-state basis in canonical order");
  basis_cmd->add_option("m", basis_m, "mode count")->required();
  basis_cmd->add_option("n", basis_n, "photon count")->required();

  std::string invariant_state;
  bool flag_closed = false, flag_projection = false, flag_both = false;
  auto* invariant =
      app.add_subcommand("invariant", "tangent/perpendicular invariants of a state");
  invariant->add_option("state", invariant_state, "state expression, mixture, or @file.json")
      ->required();
  invariant->add_flag("--closed", flag_closed, "closed formula (default; cap-exempt)");
  invariant->add_flag("--projection", flag_projection, "frame-projection path");
  invariant->add_flag("--both", flag_both, "run both paths and require agreement");

  std::string check_in, check_out;
  auto* check = app.add_subcommand("check", "decide whether a transition is ruled out");
  check->add_option("input", check_in, "input state")->required();
  check->add_option("output_state", check_out, "target state")->required();

  std::string lift_file, lift_out;
  int lift_n = 0;
  bool lift_oracle = false;
  auto* lift = app.add_subcommand("lift", "lift an m-mode scattering matrix to the n-photon space");
  lift->add_option("scattering", lift_file, "scattering matrix JSON file")->required();
  lift->add_option("-n,--photons", lift_n, "photon count")->required();
  lift->add_option("-o,--out", lift_out, "output file (default stdout)");
  lift->add_flag("--check-oracle", lift_oracle, "compare against the permanent route");

  std::string image_file;
  int image_m = 0, image_n = 0;
  auto* in_image = app.add_subcommand("in-image", "test whether a unitary is an optical lift");
  in_image->add_option("unitary", image_file, "unitary matrix JSON file")->required();
  in_image->add_option("-m,--modes", image_m, "mode count")->required();
  in_image->add_option("-n,--photons", image_n, "photon count")->required();

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "reproduce a worked table or no-go sweep");
  demo->add_option("name", demo_name, "hom, noon, fock-split, bell, ghz-w, appendix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  config.json_output = (output == "json");

  try {
    if (app.got_subcommand(dim)) {
      std::cout << dimension(dim_m, dim_n) << "\n";
      return 0;
    }
    if (app.got_subcommand(basis_cmd)) {
      auto fock_basis = FockBasis::enumerate(basis_m, basis_n, config.cap);
      if (config.json_output) {
        json states = json::array();
        for (const auto& ket : fock_basis->states()) states.push_back(ket);
        const json out = {{"m", basis_m}, {"n", basis_n},
                          {"dimension", fock_basis->size()}, {"states", states}};
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& ket : fock_basis->states()) std::cout << ket_string(ket) << "\n";
      }
      return 0;
    }
    if (app.got_subcommand(invariant))
      return cmd_invariant(invariant_state, flag_closed, flag_projection, flag_both, config);
    if (app.got_subcommand(check)) return cmd_check(check_in, check_out, config);
    if (app.got_subcommand(lift))
      return cmd_lift(lift_file, lift_n, lift_out, lift_oracle, config);
    if (app.got_subcommand(in_image))
      return cmd_in_image(image_file, image_m, image_n, config);
    if (app.got_subcommand(demo))
      return cli::run_demo(demo_name, config) == 0 ? 0 : kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
