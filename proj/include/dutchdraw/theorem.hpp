#pragma once

#include <cstdint>
#include <optional>

#include "dutchdraw/baseline.hpp"
#include "dutchdraw/measures.hpp"
#include "dutchdraw/permutation.hpp"

namespace dutchdraw {

/// Desk-scale mechanical check of the optimality theorem for one
/// (M, P, measure, objective) configuration.
struct TheoremReport {
  std::size_t m = 0;
  std::size_t positives = 0;
  std::string measure;
  Objective objective = Objective::kMaximize;
  Rational dd_score;
  Rational best_ii_score;  // extremum over all 2^M deterministic predictions
  std::optional<LabelVector> witness;  // a prediction attaining the extremum
  bool bound_holds = false;
  bool group_identity_holds = false;
  bool mixtures_within_bound = false;

  bool ok() const { return bound_holds && group_identity_holds && mixtures_within_bound; }
};

/// E over a uniformly random permutation of `actual` of the measure score,
/// computed via the group identity: equals the hypergeometric group
/// expectation at j = ones(pred).
Rational permuted_expectation_exact(const LabelVector& pred,
                                    const LabelVector& actual, const Measure& m,
                                    Objective obj);

/// The same expectation by literal enumeration of all M! permutations of
/// `actual`. Guarded at M <= 8.
Rational permuted_expectation_bruteforce(const LabelVector& pred,
                                         const LabelVector& actual,
                                         const Measure& m, Objective obj);

/// Enumerates all 2^M deterministic predictions (guard M <= 16), checks that
/// the extremal permuted expectation equals the Dutch Draw baseline score,
/// that every extremal prediction's ones-count lies in j_opt, that (for
/// M <= 7) the factorial enumeration agrees with the group identity on random
/// predictions, and that 100 random mixture classifiers stay within the
/// deterministic extrema.
TheoremReport verify_theorem(std::size_t m, std::size_t positives,
                             const Measure& measure, Objective obj,
                             std::uint64_t seed = 0);

/// {pi} == {pi^-1} as sets; executable sanity anchor. Guard M <= 8.
bool inverse_set_identity_check(std::size_t m);

}  // namespace dutchdraw
