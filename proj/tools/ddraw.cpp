// ddraw: Dutch Draw baselines, theorem verification, and simulations for
// binary-classification measures. Exact rationals inside, JSON or aligned
// tables outside.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "dutchdraw/report_json.hpp"

namespace dd = dutchdraw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTheoremFalsified = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DD_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("DD_SEED must be an unsigned integer");
    }
  }
  return 0;
}

std::string registry_listing() {
  std::string out = "known measures:";
  for (const auto& m : dd::MeasureRegistry::builtin().all()) out += " " + m.name;
  return out;
}

const dd::Measure& require_measure(const std::string& name) {
  const dd::Measure* m = dd::MeasureRegistry::builtin().find(name);
  if (!m)
    throw std::invalid_argument("unknown measure '" + name + "'; " +
                                registry_listing());
  return *m;
}

struct BaselineArgs {
  std::optional<std::string> labels_path;
  std::optional<std::string> column;
  std::optional<std::size_t> m, p;
  std::string measure;
  std::string objective = "max";
  std::string format = "table";
  bool sweep = false;
};

int run_baseline(const BaselineArgs& args) {
  dd::DutchDrawSpec spec;
  if (args.labels_path) {
    dd::LabelVector labels = dd::load_labels(*args.labels_path, args.column);
    spec.m = labels.size();
    spec.positives = labels.ones();
  } else if (args.m && args.p) {
    spec.m = *args.m;
    spec.positives = *args.p;
  } else {
    throw std::invalid_argument("need either --labels FILE or both --m and --p");
  }
  spec.measure = args.measure;
  spec.objective = dd::parse_objective(args.objective);
  spec.validate();

  const dd::Measure& measure = require_measure(args.measure);
  dd::BaselineResult result = dd::dd_baseline(spec);

  if (args.format == "json") {
    std::cout << dd::baseline_report_json(spec, measure, result, args.sweep).dump(2)
              << "\n";
    return kExitOk;
  }

  std::cout << "measure    " << measure.name << " (" << args.objective << ")\n"
            << "M, P       " << spec.m << ", " << spec.positives << "\n"
            << "score      " << result.score.str() << " = "
            << dd::score_decimal(measure, result.score) << "\n";
  std::cout << "j_opt      {";
  for (std::size_t i = 0; i < result.j_opt.size(); ++i)
    std::cout << (i ? ", " : "") << result.j_opt[i];
  std::cout << "}\n";
  std::cout << "theta_opt  {";
  for (std::size_t i = 0; i < result.theta_opt.size(); ++i)
    std::cout << (i ? ", " : "") << result.theta_opt[i].str();
  std::cout << "}\n";
  if (result.c_undef_substituted)
    std::cout << "c_undef    " << result.c_undef->str() << " (substituted)\n";
  if (args.sweep) {
    std::cout << "\n  j  expected score\n";
    for (std::size_t j = 0; j < result.sweep.size(); ++j) {
      std::cout << std::setw(3) << j << "  " << std::setw(14)
                << dd::score_decimal(measure, result.sweep[j]) << "  ("
                << result.sweep[j].str() << ")"
                << (result.sweep_uses_c_undef[j] ? "  [c_undef]" : "") << "\n";
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::size_t m = 0, p = 0;
  std::string measure;
  std::string objective = "max";
  bool all_measures = false;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& args) {
  if (args.m > 16)
    throw std::invalid_argument("M exceeds enumeration guard 16");
  std::vector<const dd::Measure*> measures;
  if (args.all_measures) {
    for (const auto& m : dd::MeasureRegistry::builtin().all()) measures.push_back(&m);
  } else {
    measures.push_back(&require_measure(args.measure));
  }
  dd::Objective obj = dd::parse_objective(args.objective);

  bool all_ok = true;
  dd::ordered_json out = dd::ordered_json::array();
  for (const dd::Measure* m : measures) {
    dd::TheoremReport report = dd::verify_theorem(args.m, args.p, *m, obj, args.seed);
    all_ok = all_ok && report.ok();
    out.push_back(dd::theorem_report_json(report, *m));
  }
  std::cout << (out.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
  return all_ok ? kExitOk : kExitTheoremFalsified;
}

struct SimulateArgs {
  std::string model;
  std::size_t m = 0, p = 0;
  std::string measure;
  std::string objective = "max";
  std::size_t trials = 100000;
  std::optional<std::uint64_t> seed;
};

int run_simulate(const SimulateArgs& args) {
  dd::DutchDrawSpec spec{args.m, args.p, args.measure,
                         dd::parse_objective(args.objective)};
  spec.validate();
  const dd::Measure& measure = require_measure(args.measure);
  dd::ClassifierModel model = dd::ClassifierModel::parse(args.model);
  std::uint64_t seed = args.seed ? *args.seed : default_seed();
  dd::SimReport report = dd::run_simulation(model, spec.m, spec.positives, measure,
                                            spec.objective, args.trials, seed);
  std::cout << dd::sim_report_json(report, spec, measure).dump(2) << "\n";
  return kExitOk;
}

struct MeasuresArgs {
  bool json = false;
  std::optional<std::string> name;
};

int run_measures(const MeasuresArgs& args) {
  const auto& registry = dd::MeasureRegistry::builtin();
  if (args.name) require_measure(*args.name);
  if (args.json) {
    dd::ordered_json listing = dd::measures_json(registry);
    if (args.name) {
      for (const auto& entry : listing) {
        if (entry["name"] == *args.name) {
          std::cout << entry.dump(2) << "\n";
          return kExitOk;
        }
      }
    }
    std::cout << listing.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& m : registry.all()) {
    if (args.name && m.name != *args.name) continue;
    std::cout << std::left << std::setw(18) << m.name << m.formula << "\n"
              << std::setw(18) << "" << m.domain << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dutch Draw baselines for binary classification measures"};
  app.require_subcommand(1);

  BaselineArgs bargs;
  auto* baseline = app.add_subcommand(
      "baseline", "Compute the Dutch Draw baseline for (M, P) or a labels file");
  baseline->add_option("--labels", bargs.labels_path, "label file (one 0/1 per line)");
  baseline->add_option("--column", bargs.column, "CSV column name or index");
  baseline->add_option("--m", bargs.m, "test-set size M");
  baseline->add_option("--p", bargs.p, "actual positive count P");
  baseline->add_option("--measure", bargs.measure)->required();
  baseline->add_option("--objective", bargs.objective)
      ->check(CLI::IsMember({"max", "min"}));
  baseline->add_option("--format", bargs.format)
      ->check(CLI::IsMember({"json", "table"}));
  baseline->add_flag("--sweep", bargs.sweep, "include the full per-j table");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand(
      "verify", "Brute-force optimality check over all deterministic predictions");
  verify->add_option("--m", vargs.m)->required();
  verify->add_option("--p", vargs.p)->required();
  verify->add_option("--measure", vargs.measure);
  verify->add_option("--objective", vargs.objective)
      ->check(CLI::IsMember({"max", "min"}));
  verify->add_flag("--all-measures", vargs.all_measures);
  verify->add_option("--seed", vargs.seed);

  SimulateArgs sargs;
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo run of an input-independent model on shuffled labels");
  simulate->add_option("--model", sargs.model, "coin:THETA | const:BITS | dd:J")
      ->required();
  simulate->add_option("--m", sargs.m)->required();
  simulate->add_option("--p", sargs.p)->required();
  simulate->add_option("--measure", sargs.measure)->required();
  simulate->add_option("--objective", sargs.objective)
      ->check(CLI::IsMember({"max", "min"}));
  simulate->add_option("--trials", sargs.trials);
  simulate->add_option("--seed", sargs.seed);

  MeasuresArgs margs;
  auto* measures = app.add_subcommand("measures", "List registry measures");
  measures->add_flag("--json", margs.json);
  measures->add_option("--name", margs.name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*baseline) return run_baseline(bargs);
    if (*verify) {
      if (!vargs.all_measures && vargs.measure.empty())
        throw std::invalid_argument("need --measure NAME or --all-measures");
      return run_verify(vargs);
    }
    if (*simulate) return run_simulate(sargs);
    if (*measures) return run_measures(margs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
