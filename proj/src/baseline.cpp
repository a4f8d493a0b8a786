#include "dutchdraw/baseline.hpp"

#include <numeric>
#include <stdexcept>

#include "dutchdraw/combinatorics.hpp"
#include "dutchdraw/rng.hpp"

namespace dutchdraw {

namespace {

// Shared sweep kernel: the c_undef extremum enumeration is O(M^3), so it is
// computed lazily on the first undefined quadruple and cached across the sweep.
Rational group_score(std::size_t m, std::size_t p, std::size_t j,
                     const Measure& measure, Objective obj,
                     std::optional<Rational>& c_undef_cache, bool& substituted) {
  const std::size_t negatives = m - p;
  const std::size_t lo = j > negatives ? j - negatives : 0;
  const std::size_t hi = j < p ? j : p;
  Rational sum(0);
  for (std::size_t tp = lo; tp <= hi; ++tp) {
    ConfusionCounts c{tp, j - tp, p - tp, negatives - (j - tp)};
    Rational value;
    if (measure.defined(c)) {
      value = measure.eval(c);
    } else {
      if (!c_undef_cache) c_undef_cache = compute_c_undef(measure, m, obj);
      value = *c_undef_cache;
      substituted = true;
    }
    sum += hypergeom_pmf({m, p, j}, tp) * value;
  }
  return sum;
}

}  // namespace

void DutchDrawSpec::validate() const {
  if (m < 1) throw std::invalid_argument("M must be >= 1");
  if (positives > m) throw std::invalid_argument("P must satisfy 0 <= P <= M");
}

Rational expected_group_score(std::size_t m, std::size_t positives, std::size_t j,
                              const Measure& measure, Objective obj) {
  if (m < 1) throw std::invalid_argument("M must be >= 1");
  if (positives > m || j > m)
    throw std::invalid_argument("P and j must lie in {0..M}");
  std::optional<Rational> cache;
  bool substituted = false;
  return group_score(m, positives, j, measure, obj, cache, substituted);
}

BaselineResult dd_baseline(std::size_t m, std::size_t positives,
                           const Measure& measure, Objective obj) {
  if (m < 1) throw std::invalid_argument("M must be >= 1");
  if (positives > m) throw std::invalid_argument("P must satisfy 0 <= P <= M");

  BaselineResult r;
  r.sweep.reserve(m + 1);
  r.sweep_uses_c_undef.reserve(m + 1);
  std::optional<Rational> cache;
  for (std::size_t j = 0; j <= m; ++j) {
    bool substituted = false;
    r.sweep.push_back(group_score(m, positives, j, measure, obj, cache, substituted));
    r.sweep_uses_c_undef.push_back(substituted ? 1 : 0);
    r.c_undef_substituted = r.c_undef_substituted || substituted;
  }
  r.c_undef = cache;

  r.score = r.sweep[0];
  for (std::size_t j = 1; j <= m; ++j) {
    if (obj == Objective::kMaximize ? r.sweep[j] > r.score : r.sweep[j] < r.score)
      r.score = r.sweep[j];
  }
  for (std::size_t j = 0; j <= m; ++j) {
    if (r.sweep[j] == r.score) {
      r.j_opt.push_back(j);
      r.theta_opt.push_back(Rational(static_cast<long>(j), static_cast<long>(m)));
    }
  }
  return r;
}

BaselineResult dd_baseline(const DutchDrawSpec& spec, const MeasureRegistry& registry) {
  spec.validate();
  return dd_baseline(spec.m, spec.positives, registry.require(spec.measure),
                     spec.objective);
}

LabelVector dd_sample(std::size_t m, std::size_t j, std::uint64_t seed) {
  if (j > m) throw std::invalid_argument("j must satisfy 0 <= j <= M");
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> bits(m, 0);
  // partial Fisher-Yates: the first j slots are a uniform j-subset
  for (std::size_t i = 0; i < j; ++i) {
    std::size_t k = i + static_cast<std::size_t>(rng.bounded(m - i));
    std::swap(idx[i], idx[k]);
    bits[idx[i]] = 1;
  }
  return LabelVector(std::move(bits));
}

std::size_t theta_to_j(std::size_t m, const Rational& theta) {
  if (theta < Rational(0) || theta > Rational(1))
    throw std::invalid_argument("theta must lie in [0,1]");
  // floor(M*theta + 1/2): rounds exact halves away from zero (theta >= 0)
  Rational t = Rational(static_cast<long>(m)) * theta + Rational(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), t.numerator().get_mpz_t(), t.denominator().get_mpz_t());
  return static_cast<std::size_t>(q.get_ui());
}

}  // namespace dutchdraw
