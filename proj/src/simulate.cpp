#include "dutchdraw/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "dutchdraw/combinatorics.hpp"
#include "dutchdraw/permutation.hpp"
#include "dutchdraw/rng.hpp"
#include "dutchdraw/theorem.hpp"

namespace dutchdraw {

ClassifierModel ClassifierModel::coin_flip(Rational theta) {
  ClassifierModel m;
  m.kind = Kind::kCoinFlip;
  m.theta = std::move(theta);
  return m;
}

ClassifierModel ClassifierModel::constant_vector(LabelVector v) {
  ClassifierModel m;
  m.kind = Kind::kConstant;
  m.constant = std::move(v);
  return m;
}

ClassifierModel ClassifierModel::dutch_draw(std::size_t j) {
  ClassifierModel m;
  m.kind = Kind::kDutchDraw;
  m.draw_size = j;
  return m;
}

ClassifierModel ClassifierModel::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument(
        "model spec must be coin:THETA | const:BITS | dd:J");
  const std::string kind = text.substr(0, colon);
  const std::string arg = text.substr(colon + 1);
  if (kind == "coin") return coin_flip(Rational::parse(arg));
  if (kind == "const") return constant_vector(LabelVector::from_bits(arg));
  if (kind == "dd") {
    std::size_t pos = 0;
    unsigned long j = std::stoul(arg, &pos);
    if (pos != arg.size()) throw std::invalid_argument("dd:J needs an integer J");
    return dutch_draw(j);
  }
  throw std::invalid_argument("model spec must be coin:THETA | const:BITS | dd:J");
}

std::string ClassifierModel::describe() const {
  switch (kind) {
    case Kind::kCoinFlip: return "coin:" + theta.str();
    case Kind::kConstant: return "const:" + constant->to_string();
    case Kind::kDutchDraw: return "dd:" + std::to_string(draw_size);
  }
  return "?";
}

void ClassifierModel::validate(std::size_t m) const {
  switch (kind) {
    case Kind::kCoinFlip:
      if (theta < Rational(0) || theta > Rational(1))
        throw std::invalid_argument("coin theta must lie in [0,1]");
      break;
    case Kind::kConstant:
      if (!constant || constant->size() != m)
        throw std::invalid_argument("constant vector length must equal M");
      break;
    case Kind::kDutchDraw:
      if (draw_size > m) throw std::invalid_argument("dd group size exceeds M");
      break;
  }
}

Rational ClassifierModel::exact_expectation(std::size_t m, std::size_t positives,
                                            const Measure& measure,
                                            Objective obj) const {
  validate(m);
  switch (kind) {
    case Kind::kCoinFlip:
      return coin_flip_expectation(m, positives, theta, measure, obj);
    case Kind::kConstant:
      return permuted_expectation_exact(*constant, LabelVector::sorted(m, positives),
                                        measure, obj);
    case Kind::kDutchDraw:
      return expected_group_score(m, positives, draw_size, measure, obj);
  }
  throw std::logic_error("unreachable");
}

Rational coin_flip_expectation(std::size_t m, std::size_t positives,
                               const Rational& theta, const Measure& measure,
                               Objective obj) {
  Rational sum(0);
  for (std::size_t j = 0; j <= m; ++j) {
    Rational w = binom_pmf(m, theta, j);
    if (!w.is_zero())
      sum += w * expected_group_score(m, positives, j, measure, obj);
  }
  return sum;
}

namespace {

// Bernoulli(theta) from one 64-bit draw; the 2^-64 discretization is far
// below the statistical resolution of any feasible trial count.
bool bernoulli(const Rational& theta, SplitMix64& rng) {
  if (theta == Rational(1)) return true;
  const Rational scaled = theta * Rational(mpz_class(1) << 64);
  mpz_class threshold;
  mpz_fdiv_q(threshold.get_mpz_t(), scaled.numerator().get_mpz_t(),
             scaled.denominator().get_mpz_t());
  mpz_class draw(static_cast<unsigned long>(rng.next()));
  return draw < threshold;
}

LabelVector sample_prediction(const ClassifierModel& model, std::size_t m,
                              SplitMix64& rng) {
  switch (model.kind) {
    case ClassifierModel::Kind::kCoinFlip: {
      std::vector<std::uint8_t> bits(m);
      for (std::size_t i = 0; i < m; ++i) bits[i] = bernoulli(model.theta, rng);
      return LabelVector(std::move(bits));
    }
    case ClassifierModel::Kind::kConstant:
      return *model.constant;
    case ClassifierModel::Kind::kDutchDraw:
      return dd_sample(m, model.draw_size, rng.next());
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SimReport run_simulation(const ClassifierModel& model, std::size_t m,
                         std::size_t positives, const Measure& measure,
                         Objective obj, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  model.validate(m);

  const LabelVector canonical = LabelVector::sorted(m, positives);
  std::optional<Rational> c_undef;
  auto score_of = [&](const ConfusionCounts& c) {
    if (measure.defined(c)) return measure.eval(c);
    if (!c_undef) c_undef = compute_c_undef(measure, m, obj);
    return *c_undef;
  };

  // exact rational aggregation keeps the mean order-insensitive
  Rational sum(0);
  double sq_sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    SplitMix64 rng(mix_seed(seed, t));
    Permutation pi = Permutation::random(m, rng);
    LabelVector shuffled = permute(canonical, pi);
    LabelVector pred = sample_prediction(model, m, rng);
    Rational score = score_of(confusion(pred, shuffled));
    sum += score;
    const double d = score.to_double();
    sq_sum += d * d;
  }

  SimReport report;
  report.model = model.describe();
  report.trials = trials;
  report.seed = seed;
  const Rational mean = sum / Rational(static_cast<long>(trials));
  report.mean_score = mean.to_double();
  const double n = static_cast<double>(trials);
  const double variance =
      std::max(0.0, sq_sum / n - report.mean_score * report.mean_score);
  report.std_error = std::sqrt(variance / n);
  report.exact_expectation = model.exact_expectation(m, positives, measure, obj);
  report.abs_error =
      std::fabs(report.mean_score - report.exact_expectation->to_double());
  return report;
}

DominanceTable dominance_check(const std::vector<ClassifierModel>& models,
                               const DutchDrawSpec& spec, std::size_t trials,
                               std::uint64_t seed, const MeasureRegistry& registry) {
  spec.validate();
  const Measure& measure = registry.require(spec.measure);
  DominanceTable table;
  table.dd_score = dd_baseline(spec, registry).score;
  std::uint64_t model_index = 0;
  for (const auto& model : models) {
    DominanceRow row;
    row.model = model.describe();
    row.exact_expectation =
        model.exact_expectation(spec.m, spec.positives, measure, spec.objective);
    if (trials > 0) {
      row.estimate = run_simulation(model, spec.m, spec.positives, measure,
                                    spec.objective, trials,
                                    mix_seed(seed, model_index))
                         .mean_score;
    }
    row.within_bound = spec.objective == Objective::kMaximize
                           ? row.exact_expectation <= table.dd_score
                           : row.exact_expectation >= table.dd_score;
    table.all_within_bound = table.all_within_bound && row.within_bound;
    table.rows.push_back(std::move(row));
    ++model_index;
  }
  return table;
}

}  // namespace dutchdraw
