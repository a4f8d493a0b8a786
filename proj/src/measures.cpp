#include "dutchdraw/measures.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "dutchdraw/rng.hpp"

namespace dutchdraw {

namespace {

mpz_class z(std::size_t v) { return mpz_class(static_cast<unsigned long>(v)); }

Rational frac(const mpz_class& n, const mpz_class& d) { return Rational(n, d); }

LabelVector vector_from_mask(std::size_t m, std::uint64_t mask) {
  std::vector<std::uint8_t> bits(m);
  for (std::size_t i = 0; i < m; ++i) bits[i] = (mask >> i) & 1u;
  return LabelVector(std::move(bits));
}

LabelVector apply_perm(const LabelVector& v, const std::vector<std::size_t>& p) {
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[p[i]];
  return LabelVector(std::move(out));
}

}  // namespace

Objective parse_objective(const std::string& text) {
  if (text == "max") return Objective::kMaximize;
  if (text == "min") return Objective::kMinimize;
  throw std::invalid_argument("objective must be 'max' or 'min'");
}

std::string objective_name(Objective obj) {
  return obj == Objective::kMaximize ? "max" : "min";
}

double Measure::display_value(const Rational& v) const {
  if (!decimal_is_signed_sqrt) return v.to_double();
  double d = v.to_double();
  return d < 0 ? -std::sqrt(-d) : std::sqrt(d);
}

Rational compute_c_undef(const Measure& m, std::size_t m_total, Objective obj) {
  if (m_total < 1) throw std::invalid_argument("c_undef: M must be >= 1");
  bool found = false;
  Rational best;
  for (std::size_t tp = 0; tp <= m_total; ++tp) {
    for (std::size_t fp = 0; fp + tp <= m_total; ++fp) {
      for (std::size_t fn = 0; fn + fp + tp <= m_total; ++fn) {
        ConfusionCounts c{tp, fp, fn, m_total - tp - fp - fn};
        if (!m.defined(c)) continue;
        Rational v = m.eval(c);
        if (!found) {
          best = v;
          found = true;
        } else if (obj == Objective::kMinimize ? v > best : v < best) {
          best = v;
        }
      }
    }
  }
  if (!found) throw std::domain_error("measure undefined everywhere");
  return best;
}

bool defined_somewhere(const Measure& m, std::size_t m_total) {
  for (std::size_t tp = 0; tp <= m_total; ++tp)
    for (std::size_t fp = 0; fp + tp <= m_total; ++fp)
      for (std::size_t fn = 0; fn + fp + tp <= m_total; ++fn)
        if (m.defined({tp, fp, fn, m_total - tp - fp - fn})) return true;
  return false;
}

Rational eval_measure(const Measure& m, const ConfusionCounts& c, Objective obj,
                      const Rational& c_undef) {
  (void)obj;
  return m.defined(c) ? m.eval(c) : c_undef;
}

VectorMeasure lift_measure(const Measure& m, std::size_t m_total, Objective obj) {
  auto cache = std::make_shared<std::optional<Rational>>();
  return [&m, m_total, obj, cache](const LabelVector& pred,
                                   const LabelVector& actual) {
    ConfusionCounts c = confusion(pred, actual);
    if (m.defined(c)) return m.eval(c);
    if (!cache->has_value()) *cache = compute_c_undef(m, m_total, obj);
    return **cache;
  };
}

InvarianceResult is_positional_invariant(const VectorMeasure& mu, std::size_t m,
                                         std::size_t trials, std::uint64_t seed) {
  if (m < 1 || trials < 1)
    throw std::invalid_argument("invariance check: M and trials must be >= 1");
  auto check = [&](const LabelVector& pred, const LabelVector& actual,
                   const std::vector<std::size_t>& perm)
      -> std::optional<InvarianceCounterexample> {
    if (mu(pred, actual) != mu(apply_perm(pred, perm), apply_perm(actual, perm)))
      return InvarianceCounterexample{pred, actual, perm};
    return std::nullopt;
  };

  if (m <= 4) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::uint64_t a = 0; a < (1ULL << m); ++a) {
        for (std::uint64_t b = 0; b < (1ULL << m); ++b) {
          if (auto ce = check(vector_from_mask(m, a), vector_from_mask(m, b), perm))
            return {false, std::move(ce)};
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {true, std::nullopt};
  }

  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::uint8_t> a(m), b(m);
    for (std::size_t i = 0; i < m; ++i) {
      a[i] = static_cast<std::uint8_t>(rng.bounded(2));
      b[i] = static_cast<std::uint8_t>(rng.bounded(2));
    }
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    if (auto ce = check(LabelVector(std::move(a)), LabelVector(std::move(b)), perm))
      return {false, std::move(ce)};
  }
  return {true, std::nullopt};
}

namespace {

bool has_actual_positive(const ConfusionCounts& c) { return c.tp + c.fn >= 1; }
bool has_actual_negative(const ConfusionCounts& c) { return c.fp + c.tn >= 1; }
bool has_predicted_positive(const ConfusionCounts& c) { return c.tp + c.fp >= 1; }
bool has_predicted_negative(const ConfusionCounts& c) { return c.tn + c.fn >= 1; }

Rational tpr_of(const ConfusionCounts& c) { return frac(z(c.tp), z(c.tp + c.fn)); }
Rational tnr_of(const ConfusionCounts& c) { return frac(z(c.tn), z(c.fp + c.tn)); }
Rational ppv_of(const ConfusionCounts& c) { return frac(z(c.tp), z(c.tp + c.fp)); }
Rational npv_of(const ConfusionCounts& c) { return frac(z(c.tn), z(c.tn + c.fn)); }

Measure fbeta_measure(const std::string& name, long beta2_num, long beta2_den) {
  Rational beta2(beta2_num, beta2_den);
  return Measure{
      name,
      "(1+b^2)*tp / ((1+b^2)*tp + b^2*fn + fp), b^2 = " + beta2.str(),
      "defined iff tp+fp+fn >= 1",
      [beta2](const ConfusionCounts& c) {
        Rational num = (Rational(1) + beta2) * Rational(z(c.tp));
        Rational den = num + beta2 * Rational(z(c.fn)) + Rational(z(c.fp));
        return num / den;
      },
      [](const ConfusionCounts& c) { return c.tp + c.fp + c.fn >= 1; }};
}

MeasureRegistry make_builtin() {
  MeasureRegistry reg;
  reg.register_measure(
      {"accuracy", "(tp+tn)/M", "always defined",
       [](const ConfusionCounts& c) { return frac(z(c.tp + c.tn), z(c.total())); },
       [](const ConfusionCounts&) { return true; }});
  reg.register_measure({"tpr", "tp/(tp+fn)", "defined iff P >= 1", tpr_of,
                        has_actual_positive});
  reg.register_measure({"tnr", "tn/(fp+tn)", "defined iff M-P >= 1", tnr_of,
                        has_actual_negative});
  reg.register_measure(
      {"fpr", "fp/(fp+tn)", "defined iff M-P >= 1",
       [](const ConfusionCounts& c) { return frac(z(c.fp), z(c.fp + c.tn)); },
       has_actual_negative});
  reg.register_measure(
      {"fnr", "fn/(tp+fn)", "defined iff P >= 1",
       [](const ConfusionCounts& c) { return frac(z(c.fn), z(c.tp + c.fn)); },
       has_actual_positive});
  reg.register_measure({"precision", "tp/(tp+fp)", "defined iff tp+fp >= 1",
                        ppv_of, has_predicted_positive});
  reg.register_measure({"npv", "tn/(tn+fn)", "defined iff tn+fn >= 1", npv_of,
                        has_predicted_negative});
  reg.register_measure(fbeta_measure("f0.5", 1, 4));
  reg.register_measure(fbeta_measure("f1", 1, 1));
  reg.register_measure(fbeta_measure("f2", 4, 1));
  reg.register_measure(
      {"jaccard", "tp/(tp+fp+fn)", "defined iff tp+fp+fn >= 1",
       [](const ConfusionCounts& c) { return frac(z(c.tp), z(c.tp + c.fp + c.fn)); },
       [](const ConfusionCounts& c) { return c.tp + c.fp + c.fn >= 1; }});
  reg.register_measure(
      {"balanced_accuracy", "(tpr+tnr)/2", "defined iff P >= 1 and M-P >= 1",
       [](const ConfusionCounts& c) {
         return (tpr_of(c) + tnr_of(c)) / Rational(2);
       },
       [](const ConfusionCounts& c) {
         return has_actual_positive(c) && has_actual_negative(c);
       }});
  // Stored as the signed square sign(n)*n^2/d so the value stays rational;
  // the displayed decimal is sign(v)*sqrt(|v|).
  reg.register_measure(
      {"mcc", "sign(tp*tn-fp*fn) * (tp*tn-fp*fn)^2 / ((tp+fp)(tp+fn)(tn+fp)(tn+fn))",
       "defined iff all four marginals >= 1",
       [](const ConfusionCounts& c) {
         mpz_class n = z(c.tp) * z(c.tn) - z(c.fp) * z(c.fn);
         mpz_class d = z(c.tp + c.fp) * z(c.tp + c.fn) * z(c.tn + c.fp) *
                       z(c.tn + c.fn);
         mpz_class n2 = n * n;
         if (sgn(n) < 0) n2 = -n2;
         return frac(n2, d);
       },
       [](const ConfusionCounts& c) {
         return has_predicted_positive(c) && has_actual_positive(c) &&
                has_actual_negative(c) && has_predicted_negative(c);
       },
       /*decimal_is_signed_sqrt=*/true});
  reg.register_measure(
      {"kappa", "2*(tp*tn-fp*fn) / ((tp+fp)(fp+tn) + (tp+fn)(fn+tn))",
       "defined iff (tp+fp)(fp+tn) + (tp+fn)(fn+tn) != 0",
       [](const ConfusionCounts& c) {
         mpz_class n = 2 * (z(c.tp) * z(c.tn) - z(c.fp) * z(c.fn));
         mpz_class d = z(c.tp + c.fp) * z(c.fp + c.tn) +
                       z(c.tp + c.fn) * z(c.fn + c.tn);
         return frac(n, d);
       },
       [](const ConfusionCounts& c) {
         return (c.tp + c.fp) * (c.fp + c.tn) + (c.tp + c.fn) * (c.fn + c.tn) != 0;
       }});
  reg.register_measure(
      {"informedness", "tpr + tnr - 1", "defined iff P >= 1 and M-P >= 1",
       [](const ConfusionCounts& c) { return tpr_of(c) + tnr_of(c) - Rational(1); },
       [](const ConfusionCounts& c) {
         return has_actual_positive(c) && has_actual_negative(c);
       }});
  reg.register_measure(
      {"markedness", "ppv + npv - 1", "defined iff tp+fp >= 1 and tn+fn >= 1",
       [](const ConfusionCounts& c) { return ppv_of(c) + npv_of(c) - Rational(1); },
       [](const ConfusionCounts& c) {
         return has_predicted_positive(c) && has_predicted_negative(c);
       }});
  return reg;
}

}  // namespace

const MeasureRegistry& MeasureRegistry::builtin() {
  static const MeasureRegistry reg = make_builtin();
  return reg;
}

const Measure* MeasureRegistry::find(const std::string& name) const {
  for (const auto& m : measures_)
    if (m.name == name) return &m;
  return nullptr;
}

const Measure& MeasureRegistry::require(const std::string& name) const {
  const Measure* m = find(name);
  if (!m) throw std::invalid_argument("unknown measure '" + name + "'");
  return *m;
}

void MeasureRegistry::register_measure(Measure m) {
  if (find(m.name))
    throw std::invalid_argument("measure '" + m.name + "' already registered");
  // Invariance gate: exhaustive at M=3, sampled at M=8. Counts-based measures
  // pass by construction; the gate guards user-supplied ones.
  auto at3 = is_positional_invariant(
      lift_measure(m, 3, Objective::kMaximize), 3, 1, 0);
  auto at8 = is_positional_invariant(
      lift_measure(m, 8, Objective::kMaximize), 8, 200, 0x9d2c5680);
  if (!at3.invariant || !at8.invariant)
    throw std::invalid_argument("measure '" + m.name +
                                "' is not positional-invariant");
  measures_.push_back(std::move(m));
}

}  // namespace dutchdraw
