#include "dutchdraw/theorem.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "dutchdraw/combinatorics.hpp"
#include "dutchdraw/rng.hpp"

namespace dutchdraw {

namespace {

LabelVector vector_from_mask(std::size_t m, std::uint64_t mask) {
  std::vector<std::uint8_t> bits(m);
  for (std::size_t i = 0; i < m; ++i) bits[i] = (mask >> i) & 1u;
  return LabelVector(std::move(bits));
}

}  // namespace

Rational permuted_expectation_exact(const LabelVector& pred,
                                    const LabelVector& actual, const Measure& m,
                                    Objective obj) {
  if (pred.size() != actual.size())
    throw std::invalid_argument("dimension mismatch");
  return expected_group_score(pred.size(), actual.ones(), pred.ones(), m, obj);
}

Rational permuted_expectation_bruteforce(const LabelVector& pred,
                                         const LabelVector& actual,
                                         const Measure& m, Objective obj) {
  if (pred.size() != actual.size())
    throw std::invalid_argument("dimension mismatch");
  const std::size_t n = pred.size();
  if (n > 8)
    throw std::invalid_argument(
        "factorial enumeration guard: M exceeds 8");
  std::optional<Rational> c_undef;
  Rational sum(0);
  std::size_t count = 0;
  for (const Permutation& p : Permutation::all(n)) {
    ConfusionCounts c = confusion(pred, permute(actual, p));
    if (m.defined(c)) {
      sum += m.eval(c);
    } else {
      if (!c_undef) c_undef = compute_c_undef(m, n, obj);
      sum += *c_undef;
    }
    ++count;
  }
  return sum / Rational(static_cast<long>(count));
}

TheoremReport verify_theorem(std::size_t m, std::size_t positives,
                             const Measure& measure, Objective obj,
                             std::uint64_t seed) {
  if (m > 16)
    throw std::invalid_argument("enumeration guard: M exceeds 16");
  if (m < 1 || positives > m)
    throw std::invalid_argument("require 1 <= M and 0 <= P <= M");

  TheoremReport report;
  report.m = m;
  report.positives = positives;
  report.measure = measure.name;
  report.objective = obj;

  const BaselineResult dd = dd_baseline(m, positives, measure, obj);
  report.dd_score = dd.score;
  const LabelVector actual = LabelVector::sorted(m, positives);
  const bool maximize = obj == Objective::kMaximize;

  // extremum over all 2^M deterministic predictions; each one's permuted
  // expectation reduces to the group expectation at its ones-count
  bool witness_ok = true;
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    const std::size_t ones = static_cast<std::size_t>(std::popcount(mask));
    const Rational& value = dd.sweep[ones];
    if (!report.witness ||
        (maximize ? value > report.best_ii_score : value < report.best_ii_score)) {
      report.best_ii_score = value;
      report.witness = vector_from_mask(m, mask);
    }
  }
  for (std::size_t j = 0; j <= m; ++j) {
    if (dd.sweep[j] == report.best_ii_score &&
        std::find(dd.j_opt.begin(), dd.j_opt.end(), j) == dd.j_opt.end())
      witness_ok = false;
  }
  report.bound_holds = (report.best_ii_score == dd.score) && witness_ok;

  // spot-check the group identity against the literal M! enumeration
  report.group_identity_holds = true;
  if (m <= 7) {
    SplitMix64 rng(mix_seed(seed, 1));
    const std::size_t samples = std::min<std::size_t>(12, 1ULL << m);
    for (std::size_t s = 0; s < samples; ++s) {
      LabelVector pred = vector_from_mask(m, rng.bounded(1ULL << m));
      if (permuted_expectation_bruteforce(pred, actual, measure, obj) !=
          permuted_expectation_exact(pred, actual, measure, obj)) {
        report.group_identity_holds = false;
        break;
      }
    }
  }

  // random mixture classifiers: convex combinations of deterministic
  // predictions must stay within the deterministic extrema
  Rational sweep_min = dd.sweep[0], sweep_max = dd.sweep[0];
  for (const Rational& v : dd.sweep) {
    if (v < sweep_min) sweep_min = v;
    if (v > sweep_max) sweep_max = v;
  }
  report.mixtures_within_bound = true;
  SplitMix64 rng(mix_seed(seed, 2));
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t atoms = 1 + static_cast<std::size_t>(rng.bounded(4));
    long total_weight = 0;
    std::vector<std::pair<long, std::size_t>> support;  // (weight, ones-count)
    for (std::size_t a = 0; a < atoms; ++a) {
      long w = 1 + static_cast<long>(rng.bounded(10));
      total_weight += w;
      support.emplace_back(
          w, static_cast<std::size_t>(std::popcount(rng.bounded(1ULL << m))));
    }
    Rational expectation(0);
    for (auto [w, ones] : support)
      expectation += Rational(w, total_weight) * dd.sweep[ones];
    if (expectation < sweep_min || expectation > sweep_max) {
      report.mixtures_within_bound = false;
      break;
    }
  }
  return report;
}

bool inverse_set_identity_check(std::size_t m) {
  if (m > 8)
    throw std::invalid_argument("permutation enumeration guard: M exceeds 8");
  std::set<std::vector<std::size_t>> forward, inverse;
  for (const Permutation& p : Permutation::all(m)) {
    forward.insert(p.image());
    inverse.insert(p.inverse().image());
  }
  return forward == inverse;
}

}  // namespace dutchdraw
