#include "tperiod/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tperiod/digraph.hpp"
#include "tperiod/oracle.hpp"
#include "tperiod/walksets.hpp"

namespace tperiod::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&text](const std::string& part) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw UsageError("bad order range '" + text + "'");
    }
    if (used != part.size()) throw UsageError("bad order range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

void write_set(std::ostream& os, const OffsetSet& xs) {
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? " " : "") << xs[k];
}

int cmd_analyze(const std::string& spec_text, bool json, std::size_t cap,
                std::ostream& out) {
  const ToeplitzSpec spec = parse_spec(spec_text);
  const PeriodReport report = analyze(spec, cap);
  if (json)
    out << report_json(report).dump(2) << '\n';
  else
    write_report_text(out, report);
  return kExitOk;
}

int cmd_walksets(const std::string& spec_text, std::size_t i, bool json,
                 std::ostream& out) {
  const ToeplitzSpec spec = parse_spec(spec_text);
  if (!spec.two_sided()) throw UsageError("walksets needs nonempty S and T");
  if (i < 1 || i > kDefaultQBound)
    throw UsageError("walk length must lie in [1, " +
                     std::to_string(kDefaultQBound) + "]");
  PowerSequence powers(BoolMatrix::from_toeplitz(spec));
  const WalkSets sets = walk_sets(spec, i, powers);
  if (json) {
    nlohmann::ordered_json j;
    j["spec"] = to_string(spec);
    j["i"] = i;
    j["P"] = sets.P;
    j["Q"] = sets.Q;
    j["R"] = sets.R;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "P_" << i << ": ";
  write_set(out, sets.P);
  out << "\nQ_" << i << ": ";
  write_set(out, sets.Q);
  out << "\nR_" << i << ": ";
  write_set(out, sets.R);
  out << '\n';
  return kExitOk;
}

int cmd_contract(const std::string& spec_text, std::size_t d,
                 std::ostream& out) {
  const ToeplitzSpec spec = parse_spec(spec_text);
  if (d < 1 || d > static_cast<std::size_t>(spec.n()))
    throw UsageError("modulus d must lie in [1, n]");
  out << to_dot(contract(Digraph::of(spec), d));
  return kExitOk;
}

int cmd_sweep(const SweepConfig& config, const std::string& out_path,
              std::ostream& out) {
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SweepResult result = run_sweep(config);
  if (out_path.empty()) {
    write_report(out, result);
  } else {
    std::ofstream file(out_path);
    if (!file) throw UsageError("cannot open '" + out_path + "' for writing");
    write_report(file, result);
  }
  return result.violations() == 0 ? kExitOk : kExitViolations;
}

}  // namespace

nlohmann::ordered_json report_json(const PeriodReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.spec.n();
  j["S"] = report.spec.S();
  j["T"] = report.spec.T();
  if (report.gcd) {
    j["d"] = report.gcd->d;
    j["d_plus"] = report.gcd->d_plus;
  } else {
    j["d"] = nullptr;
    j["d_plus"] = nullptr;
  }
  j["matrix_index"] = report.matrix_index;
  j["matrix_period"] = report.matrix_period;
  j["competition_index"] = report.competition_index;
  j["competition_period"] = report.competition_period;
  j["walk_ensured"] = report.walk_ensured();
  if (report.walk_ensured() && report.certificate.rule)
    j["certificate_rule"] = to_string(*report.certificate.rule);
  else
    j["certificate_rule"] = nullptr;
  if (auto m = report.limit_matches_prediction())
    j["limit_matches_prediction"] = *m;
  else
    j["limit_matches_prediction"] = nullptr;
  return j;
}

void write_report_text(std::ostream& os, const PeriodReport& report) {
  os << "spec                 " << to_string(report.spec) << '\n';
  if (report.gcd) {
    os << "d                    " << report.gcd->d << '\n'
       << "d_plus               " << report.gcd->d_plus << '\n'
       << "d_plus/d             " << report.gcd->ratio() << '\n';
  }
  os << "matrix index         " << report.matrix_index << '\n'
     << "matrix period        " << report.matrix_period << '\n'
     << "competition index    " << report.competition_index << '\n'
     << "competition period   " << report.competition_period << '\n'
     << "walk-ensured         " << (report.walk_ensured() ? "yes" : "no") << '\n'
     << "certificate          " << describe(report.certificate) << '\n';
  if (report.predicted) {
    os << "predicted limit      congruence classes mod " << report.gcd->d_plus
       << '\n'
       << "observed limit       "
       << (report.limit_matrix ? "converged" : "no limit (period > 1)") << '\n'
       << "limit matches        "
       << (*report.limit_matches_prediction() ? "yes" : "no") << '\n';
  }
  if (report.limit_matrix) os << "limit matrix\n" << *report.limit_matrix;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Periods and competition limits of Boolean Toeplitz matrices",
               "tperiod"};
  app.require_subcommand(1);

  std::string spec_text;
  bool json = false;
  std::size_t cap = 0;

  auto* analyze_cmd = app.add_subcommand("analyze", "Period report for one spec");
  analyze_cmd->add_option("spec", spec_text, "e.g. \"n=6;S=2,4;T=5\"")->required();
  analyze_cmd->add_flag("--json", json, "Emit a JSON document");
  analyze_cmd->add_option("--max-power", cap, "Power iteration cap (0: default)");

  std::size_t length = 0;
  auto* walk_cmd = app.add_subcommand("walksets", "P_i, Q_i and R_i for one spec");
  walk_cmd->add_option("spec", spec_text)->required();
  walk_cmd->add_option("i", length, "Walk length")->required();
  walk_cmd->add_flag("--json", json);

  std::size_t modulus = 0;
  auto* contract_cmd =
      app.add_subcommand("contract", "DOT of the residue quotient D/Z_d");
  contract_cmd->add_option("spec", spec_text)->required();
  contract_cmd->add_option("d", modulus, "Modulus")->required();

  SweepConfig sweep;
  std::string range = "2..7";
  std::string mode = "exhaustive";
  std::string out_path;
  std::vector<std::string> checks;
  auto* sweep_cmd = app.add_subcommand("sweep", "Brute-force cross-validation");
  sweep_cmd->add_option("--n", range, "Order range a..b or a single order");
  sweep_cmd->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  sweep_cmd->add_option("--samples", sweep.samples, "Specs per order (random)");
  sweep_cmd->add_option("--seed", sweep.seed, "Random seed");
  sweep_cmd->add_option("--out", out_path, "Report file (default stdout)");
  sweep_cmd->add_option("--max-power", sweep.max_power, "Power iteration cap");
  sweep_cmd->add_option("--checks", checks, "Subset of checks")->delimiter(',');
  sweep_cmd->add_option("--jobs", sweep.workers, "Worker threads");

  std::vector<std::string> argv_storage{"tperiod"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(spec_text, json, cap, out);
    if (*walk_cmd) return cmd_walksets(spec_text, length, json, out);
    if (*contract_cmd) return cmd_contract(spec_text, modulus, out);
    if (*sweep_cmd) {
      std::tie(sweep.n_min, sweep.n_max) = parse_range(range);
      sweep.mode = mode == "random" ? SweepMode::Random : SweepMode::Exhaustive;
      sweep.checks = {checks.begin(), checks.end()};
      return cmd_sweep(sweep, out_path, out);
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  }
  return kExitUsage;
}

}  // namespace tperiod::cli
