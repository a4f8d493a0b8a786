#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dutchdraw/labels.hpp"
#include "dutchdraw/rational.hpp"

namespace dutchdraw {

enum class Objective { kMaximize, kMinimize };

Objective parse_objective(const std::string& text);  // "max" | "min"
std::string objective_name(Objective obj);

/// A named scoring function over confusion counts together with its
/// domain-of-definition predicate. Restricting measures to functions of the
/// confusion counts makes them positional-invariant by construction.
struct Measure {
  std::string name;
  std::string formula;
  std::string domain;  // human-readable description of where `defined` holds
  std::function<Rational(const ConfusionCounts&)> eval;
  std::function<bool(const ConfusionCounts&)> defined;
  /// True for measures stored as a signed-square surrogate (MCC): the exact
  /// value kept in the Rational layer is sign(x)*x^2 and the displayed
  /// decimal is sign(v)*sqrt(|v|).
  bool decimal_is_signed_sqrt = false;

  double display_value(const Rational& v) const;
};

/// Substitution constant for a measure's undefined inputs: the extremum of
/// the measure over all defined confusion quadruples of total M, taken so
/// that predicting an undefined case is never advantageous (max when
/// minimizing, min when maximizing). Throws std::domain_error when the
/// measure is defined nowhere at size M.
Rational compute_c_undef(const Measure& m, std::size_t m_total, Objective obj);

/// True iff some confusion quadruple of total M lies in the measure's domain.
/// Several registry measures (MCC, kappa, ...) are defined nowhere at M=1,
/// where no quadruple has all four margins positive.
bool defined_somewhere(const Measure& m, std::size_t m_total);

/// Total evaluation: m.eval(c) where defined, c_undef elsewhere.
Rational eval_measure(const Measure& m, const ConfusionCounts& c, Objective obj,
                      const Rational& c_undef);

/// Raw vector-level scoring function, used by the invariance tester. Lifted
/// registry measures go through confusion counts; fixtures (like the
/// first-position measure) can be arbitrary.
using VectorMeasure =
    std::function<Rational(const LabelVector& pred, const LabelVector& actual)>;

/// Lift a counts-based measure to the vector level (total via c_undef).
VectorMeasure lift_measure(const Measure& m, std::size_t m_total, Objective obj);

struct InvarianceCounterexample {
  LabelVector pred;
  LabelVector actual;
  std::vector<std::size_t> perm;  // 0-based one-line image
};

struct InvarianceResult {
  bool invariant = true;
  std::optional<InvarianceCounterexample> counterexample;
};

/// Checks mu(pred, actual) == mu(perm(pred), perm(actual)). Exhaustive over
/// all pairs and permutations when M <= 4, otherwise `trials` random triples.
InvarianceResult is_positional_invariant(const VectorMeasure& mu, std::size_t m,
                                         std::size_t trials, std::uint64_t seed);

class MeasureRegistry {
 public:
  /// The built-in registry: accuracy, tpr, tnr, fpr, fnr, precision, npv,
  /// f0.5, f1, f2, jaccard, balanced_accuracy, mcc, kappa, informedness,
  /// markedness.
  static const MeasureRegistry& builtin();

  const Measure* find(const std::string& name) const;
  const Measure& require(const std::string& name) const;  // throws on miss
  const std::vector<Measure>& all() const { return measures_; }

  /// Registers a user measure after an invariance gate: exhaustive check at
  /// M=3, sampled at M=8. Throws std::invalid_argument if the lifted measure
  /// is not positional-invariant or the name collides.
  void register_measure(Measure m);

  MeasureRegistry() = default;

 private:
  std::vector<Measure> measures_;
};

}  // namespace dutchdraw
