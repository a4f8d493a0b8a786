#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dutchdraw/labels.hpp"
#include "dutchdraw/measures.hpp"
#include "dutchdraw/rational.hpp"

namespace dutchdraw {

struct DutchDrawSpec {
  std::size_t m = 0;        // test-set size M >= 1
  std::size_t positives = 0;  // P, 0 <= P <= M
  std::string measure;
  Objective objective = Objective::kMaximize;

  void validate() const;
};

struct BaselineResult {
  std::vector<std::size_t> j_opt;   // full argmin/argmax set, ties kept
  std::vector<Rational> theta_opt;  // representatives j/M
  Rational score;
  std::vector<Rational> sweep;           // index j in {0..M}
  std::vector<std::uint8_t> sweep_uses_c_undef;  // per-j substitution flag
  std::optional<Rational> c_undef;       // set iff any substitution happened
  bool c_undef_substituted = false;
};

/// E[mu(pred, Y)] for pred uniform on the vectors with exactly j ones,
/// against any Y with P ones. Decomposed over the hypergeometric distribution
/// of TP; undefined points absorbed by C_undef.
Rational expected_group_score(std::size_t m, std::size_t positives, std::size_t j,
                              const Measure& measure, Objective obj);

/// Sweeps all group sizes j in {0..M} and returns the extremal expected score
/// with the full tie set.
BaselineResult dd_baseline(std::size_t m, std::size_t positives,
                           const Measure& measure, Objective obj);

BaselineResult dd_baseline(const DutchDrawSpec& spec,
                           const MeasureRegistry& registry = MeasureRegistry::builtin());

/// Uniform draw from the vectors of length M with exactly j ones;
/// deterministic given the seed.
LabelVector dd_sample(std::size_t m, std::size_t j, std::uint64_t seed);

/// Nearest integer to M*theta; exact halves round away from zero.
std::size_t theta_to_j(std::size_t m, const Rational& theta);

}  // namespace dutchdraw
