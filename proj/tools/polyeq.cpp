// polyeq: verify, render and sweep regular-polygon equal-distance configurations.
//
// Exit codes: 0 all checks pass (including a valid "no point exists" finding), 1 a check failed,
// 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polyeq/bottema.hpp"
#include "polyeq/cli/report.hpp"
#include "polyeq/cli/scenario.hpp"
#include "polyeq/cli/svg.hpp"
#include "polyeq/cli/sweep.hpp"

namespace {

using namespace polyeq;
using namespace polyeq::cli;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct ToleranceFlags {
  std::optional<double> rel;
  std::optional<double> abs;

  Tolerance apply(std::optional<Tolerance> base) const {
    const Tolerance t = base.value_or(Tolerance{});
    return Tolerance(rel.value_or(t.rel), abs.value_or(t.abs));
  }
  bool any() const { return rel || abs; }
};

void add_tolerance_flags(CLI::App* cmd, ToleranceFlags& flags) {
  cmd->add_option("--tolerance-rel", flags.rel, "Relative tolerance (overrides the scenario)");
  cmd->add_option("--tolerance-abs", flags.abs, "Absolute tolerance floor (overrides the scenario)");
}

Scenario load_scenario(const std::string& path, const ToleranceFlags& flags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot open scenario file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str());
  if (flags.any()) s.tolerance = flags.apply(s.tolerance);
  return s;
}

Point parse_xy(const std::string& text, const char* flag) {
  double x = 0.0;
  double y = 0.0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf%c", &x, &y, &tail) != 2) {
    throw Error(ErrorCode::ValidationError, std::string(flag) + ": expected x,y");
  }
  return {x, y};
}

bool parse_range(const std::string& text, int& lo, int& hi) {
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d-%d%c", &lo, &hi, &tail) == 2) return true;
  if (std::sscanf(text.c_str(), "%d%c", &lo, &tail) == 1) {
    hi = lo;
    return true;
  }
  return false;
}

int emit(const Report& report, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << report_to_text(report);
  }
  return report.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equal-distance points of regular polygon pairs and the generalized Bottema construction"};
  app.require_subcommand(1);

  bool as_json = false;
  ToleranceFlags tol_flags;

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Run every check for a scenario file");
  verify->add_option("scenario", verify_path, "Scenario JSON file")->required();
  verify->add_flag("--json", as_json, "Emit the report as JSON");
  add_tolerance_flags(verify, tol_flags);

  std::string render_path;
  std::string render_out;
  auto* render = app.add_subcommand("render", "Draw a scenario as SVG");
  render->add_option("scenario", render_path, "Scenario JSON file")->required();
  render->add_option("-o,--output", render_out, "SVG output file")->required();
  add_tolerance_flags(render, tol_flags);

  std::string sweep_kind;
  std::string sweep_n = "3-12";
  SweepOptions sweep_opt;
  auto* sweep = app.add_subcommand("sweep", "Randomized property sweep over generated scenarios");
  sweep->add_option("--kind", sweep_kind, "pair | shared_vertex | bottema | identity_check")->required();
  sweep->add_option("--n", sweep_n, "Vertex count or range lo-hi");
  sweep->add_option("--count", sweep_opt.count, "Number of configurations");
  sweep->add_option("--seed", sweep_opt.seed, "Seed");
  sweep->add_option("--workers", sweep_opt.workers, "Worker threads (0 = all cores)");
  sweep->add_flag("--json", as_json, "Emit the summary as JSON");

  std::string an_text;
  std::string bn_text;
  int bottema_n = 4;
  int bottema_samples = 100;
  std::uint64_t bottema_seed = 1;
  auto* bottema = app.add_subcommand("bottema", "Check that M1 does not depend on the apex");
  bottema->add_option("--an", an_text, "Base vertex An as x,y")->required();
  bottema->add_option("--bn", bn_text, "Base vertex Bn as x,y")->required();
  bottema->add_option("--n", bottema_n, "Vertex count")->required();
  bottema->add_option("--samples", bottema_samples, "Apex samples");
  bottema->add_option("--seed", bottema_seed, "Seed");
  bottema->add_flag("--json", as_json, "Emit the result as JSON");
  add_tolerance_flags(bottema, tol_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify) {
      return emit(run_scenario(load_scenario(verify_path, tol_flags)), as_json);
    }

    if (*render) {
      const Scenario s = load_scenario(render_path, tol_flags);
      const Report report = run_scenario(s);
      std::ofstream out(render_out, std::ios::binary);
      if (!out) throw Error(ErrorCode::ValidationError, "cannot write '" + render_out + "'");
      out << render_svg(s, report);
      std::cout << "wrote " << render_out << "\n";
      return report.pass ? kExitPass : kExitFail;
    }

    if (*sweep) {
      const auto kind = kind_from_string(sweep_kind);
      if (!kind) throw Error(ErrorCode::ValidationError, "--kind: unknown kind '" + sweep_kind + "'");
      sweep_opt.kind = *kind;
      if (!parse_range(sweep_n, sweep_opt.n_min, sweep_opt.n_max) || sweep_opt.n_min < 3 ||
          sweep_opt.n_max < sweep_opt.n_min) {
        throw Error(ErrorCode::ValidationError, "--n: expected N or lo-hi with 3 <= lo <= hi");
      }
      if (sweep_opt.count < 1) throw Error(ErrorCode::ValidationError, "--count: must be positive");
      const SweepSummary summary = run_sweep(sweep_opt);
      if (as_json) {
        nlohmann::json doc;
        doc["kind"] = sweep_kind;
        doc["n"] = {sweep_opt.n_min, sweep_opt.n_max};
        doc["count"] = summary.configurations;
        doc["seed"] = sweep_opt.seed;
        doc["failed_configurations"] = summary.failed_configurations;
        for (const auto& [name, st] : summary.checks) {
          doc["checks"][name] = {{"runs", st.runs}, {"failures", st.failures}, {"max_residual", st.max_residual}};
        }
        doc["pass"] = summary.pass();
        std::cout << doc.dump(2) << "\n";
      } else {
        std::printf("sweep %s n=%d-%d count=%d seed=%llu\n", sweep_kind.c_str(), sweep_opt.n_min, sweep_opt.n_max,
                    summary.configurations, static_cast<unsigned long long>(sweep_opt.seed));
        for (const auto& [name, st] : summary.checks) {
          std::printf("%s %-40s runs=%d failures=%d max_residual=%.3e\n", st.failures ? "FAIL" : "PASS", name.c_str(),
                      st.runs, st.failures, st.max_residual);
        }
        if (summary.first_failure >= 0) std::printf("first failing configuration: %d\n", summary.first_failure);
        std::printf("overall: %s\n", summary.pass() ? "PASS" : "FAIL");
      }
      return summary.pass() ? kExitPass : kExitFail;
    }

    if (*bottema) {
      const Point an = parse_xy(an_text, "--an");
      const Point bn = parse_xy(bn_text, "--bn");
      if (bottema_n < 3) throw Error(ErrorCode::ValidationError, "--n: must be >= 3");
      const Tolerance tol = tol_flags.apply(std::nullopt);
      const IndependenceReport r = verify_independence(an, bn, bottema_n, bottema_samples, tol, bottema_seed);
      if (as_json) {
        nlohmann::json doc = {{"n", bottema_n},
                              {"samples", r.samples},
                              {"m1", {r.reference.x, r.reference.y}},
                              {"max_deviation", r.max_deviation},
                              {"max_closed_form_error", r.max_closed_form_error},
                              {"tolerance", r.bound},
                              {"pass", r.pass}};
        std::cout << doc.dump(2) << "\n";
      } else {
        std::printf("M1 (closed form) = (%.12g, %.12g)\n", r.reference.x, r.reference.y);
        std::printf("%s max_deviation=%.3e max_closed_form_error=%.3e tolerance=%.3e samples=%d\n",
                    r.pass ? "PASS" : "FAIL", r.max_deviation, r.max_closed_form_error, r.bound, r.samples);
      }
      return r.pass ? kExitPass : kExitFail;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
