#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dutchdraw/baseline.hpp"
#include "dutchdraw/labels.hpp"
#include "dutchdraw/measures.hpp"

namespace dutchdraw {

/// Input-independent reference classifiers.
struct ClassifierModel {
  enum class Kind { kCoinFlip, kConstant, kDutchDraw };

  Kind kind = Kind::kCoinFlip;
  Rational theta;                        // coin flip
  std::optional<LabelVector> constant;   // constant prediction
  std::size_t draw_size = 0;             // Dutch Draw group size j

  static ClassifierModel coin_flip(Rational theta);
  static ClassifierModel constant_vector(LabelVector v);
  static ClassifierModel dutch_draw(std::size_t j);

  /// Parses the CLI grammar "coin:THETA" | "const:BITS" | "dd:J".
  static ClassifierModel parse(const std::string& text);

  std::string describe() const;
  void validate(std::size_t m) const;

  /// Exact permuted expectation of the model against any Y with P ones.
  Rational exact_expectation(std::size_t m, std::size_t positives,
                             const Measure& measure, Objective obj) const;
};

/// E[mu] for the coin-flip classifier: the heads-count is binomial and,
/// conditioned on the count, the prediction is uniform on its group.
Rational coin_flip_expectation(std::size_t m, std::size_t positives,
                               const Rational& theta, const Measure& measure,
                               Objective obj);

struct SimReport {
  std::string model;
  std::size_t trials = 0;
  double mean_score = 0.0;
  double std_error = 0.0;
  std::optional<Rational> exact_expectation;
  double abs_error = 0.0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of the permuted expectation: each trial draws a fresh
/// uniform permutation of the canonical labels and a fresh classifier output.
/// Per-trial randomness is keyed on (seed, trial), so the report is
/// deterministic and independent of evaluation order.
SimReport run_simulation(const ClassifierModel& model, std::size_t m,
                         std::size_t positives, const Measure& measure,
                         Objective obj, std::size_t trials, std::uint64_t seed);

struct DominanceRow {
  std::string model;
  Rational exact_expectation;
  std::optional<double> estimate;
  bool within_bound = false;
};

struct DominanceTable {
  Rational dd_score;
  std::vector<DominanceRow> rows;
  bool all_within_bound = true;
};

/// Exact expectations (plus Monte Carlo estimates when trials > 0) for a set
/// of models, checked against the Dutch Draw baseline score.
DominanceTable dominance_check(const std::vector<ClassifierModel>& models,
                               const DutchDrawSpec& spec, std::size_t trials,
                               std::uint64_t seed,
                               const MeasureRegistry& registry =
                                   MeasureRegistry::builtin());

}  // namespace dutchdraw
