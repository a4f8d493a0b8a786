#include <doctest.h>

#include <numeric>

#include "dutchdraw/measures.hpp"
#include "dutchdraw/permutation.hpp"
#include "test_support.hpp"

using namespace dutchdraw;

TEST_CASE("confusion tabulation") {
  CHECK(confusion(LabelVector::from_bits("101"), LabelVector::from_bits("111")) ==
        ConfusionCounts{2, 0, 1, 0});
  CHECK(confusion(LabelVector::from_bits("0000"), LabelVector::from_bits("0000")) ==
        ConfusionCounts{0, 0, 0, 4});
  CHECK(confusion(LabelVector::from_bits("1100"), LabelVector::from_bits("0011")) ==
        ConfusionCounts{0, 2, 2, 0});
  CHECK_THROWS_WITH_AS(
      confusion(LabelVector::from_bits("10"), LabelVector::from_bits("100")),
      "dimension mismatch", std::invalid_argument);
}

TEST_CASE("label vector validation") {
  CHECK_THROWS_AS(LabelVector(std::vector<std::uint8_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(LabelVector({0, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LabelVector::from_bits("01x"), std::invalid_argument);
  CHECK(LabelVector::sorted(5, 2).to_string() == "11000");
}

TEST_CASE("confusion is permutation-equivariant, exhaustive for M <= 6") {
  for (std::size_t m = 1; m <= 6; ++m) {
    auto perms = Permutation::all(m);
    for (std::uint64_t a = 0; a < (1ULL << m); ++a) {
      for (std::uint64_t b = 0; b < (1ULL << m); ++b) {
        LabelVector pred = ddtest::vector_from_mask(m, a);
        LabelVector actual = ddtest::vector_from_mask(m, b);
        ConfusionCounts base = confusion(pred, actual);
        for (const auto& p : perms)
          CHECK(confusion(permute(pred, p), permute(actual, p)) == base);
      }
    }
  }
}

TEST_CASE("registry holds the expected measures") {
  const auto& reg = MeasureRegistry::builtin();
  CHECK(reg.all().size() >= 14);
  for (const char* name :
       {"accuracy", "tpr", "tnr", "fpr", "fnr", "precision", "npv", "f0.5", "f1",
        "f2", "jaccard", "balanced_accuracy", "mcc", "kappa", "informedness",
        "markedness"})
    CHECK(reg.find(name) != nullptr);
  CHECK(reg.find("nope") == nullptr);
  CHECK_THROWS_AS(reg.require("nope"), std::invalid_argument);
}

TEST_CASE("domain predicates at their boundaries") {
  const auto& reg = MeasureRegistry::builtin();
  auto defined = [&](const char* name, ConfusionCounts c) {
    return reg.require(name).defined(c);
  };
  CHECK(defined("accuracy", {0, 0, 0, 4}));
  CHECK_FALSE(defined("tpr", {0, 2, 0, 2}));   // P = 0
  CHECK(defined("tpr", {0, 2, 1, 1}));         // P = 1
  CHECK_FALSE(defined("fnr", {0, 2, 0, 2}));
  CHECK_FALSE(defined("tnr", {2, 0, 2, 0}));   // M-P = 0
  CHECK(defined("tnr", {2, 0, 1, 1}));
  CHECK_FALSE(defined("fpr", {2, 0, 2, 0}));
  CHECK_FALSE(defined("precision", {0, 0, 2, 2}));  // no predicted positives
  CHECK(defined("precision", {1, 0, 2, 1}));
  CHECK_FALSE(defined("npv", {2, 2, 0, 0}));   // no predicted negatives
  CHECK(defined("npv", {2, 1, 0, 1}));
  CHECK_FALSE(defined("f1", {0, 0, 0, 4}));    // tp+fp+fn = 0
  CHECK(defined("f1", {0, 1, 0, 3}));
  CHECK_FALSE(defined("jaccard", {0, 0, 0, 4}));
  CHECK_FALSE(defined("balanced_accuracy", {0, 2, 0, 2}));
  CHECK_FALSE(defined("balanced_accuracy", {2, 0, 2, 0}));
  CHECK(defined("balanced_accuracy", {1, 1, 1, 1}));
  CHECK_FALSE(defined("mcc", {2, 2, 0, 0}));
  CHECK(defined("mcc", {1, 1, 1, 1}));
  CHECK_FALSE(defined("kappa", {4, 0, 0, 0}));
  CHECK(defined("kappa", {2, 1, 0, 1}));
  CHECK_FALSE(defined("informedness", {0, 2, 0, 2}));
  CHECK_FALSE(defined("markedness", {0, 0, 2, 2}));
  CHECK(defined("markedness", {1, 1, 1, 1}));
}

TEST_CASE("measure values") {
  const auto& reg = MeasureRegistry::builtin();
  CHECK(reg.require("accuracy").eval({2, 0, 1, 0}) == Rational(2, 3));
  CHECK(reg.require("f1").eval({2, 1, 1, 2}) == Rational(2, 3));
  CHECK(reg.require("jaccard").eval({2, 1, 1, 2}) == Rational(1, 2));
  CHECK(reg.require("kappa").eval({2, 1, 1, 2}) == Rational(1, 3));
  // perfect prediction: mcc surrogate is +1 (sign * square of 1)
  CHECK(reg.require("mcc").eval({2, 0, 0, 2}) == Rational(1));
  CHECK(reg.require("mcc").eval({0, 2, 2, 0}) == Rational(-1));
  CHECK(reg.require("informedness").eval({2, 0, 0, 2}) == Rational(1));
  CHECK(reg.require("markedness").eval({1, 1, 1, 1}) == Rational(0));
}

TEST_CASE("mcc decimal display takes the signed square root") {
  const auto& mcc = MeasureRegistry::builtin().require("mcc");
  CHECK(mcc.display_value(Rational(1, 4)) == doctest::Approx(0.5));
  CHECK(mcc.display_value(Rational(-1, 4)) == doctest::Approx(-0.5));
  const auto& acc = MeasureRegistry::builtin().require("accuracy");
  CHECK(acc.display_value(Rational(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("c_undef equals the brute-force extremum") {
  const auto& reg = MeasureRegistry::builtin();
  // accuracy is defined everywhere; the operation still returns the extremum
  CHECK(compute_c_undef(reg.require("accuracy"), 4, Objective::kMaximize) ==
        Rational(0));
  CHECK(compute_c_undef(reg.require("tpr"), 4, Objective::kMinimize) == Rational(1));
  CHECK(compute_c_undef(reg.require("precision"), 3, Objective::kMaximize) ==
        Rational(0));
  for (const auto& m : reg.all()) {
    for (std::size_t total : {1, 2, 5, 8}) {
      for (auto obj : {Objective::kMaximize, Objective::kMinimize}) {
        if (!defined_somewhere(m, total)) {
          CHECK_THROWS_AS(compute_c_undef(m, total, obj), std::domain_error);
          CHECK_THROWS_AS(ddtest::brute_c_undef(m, total, obj), std::domain_error);
          continue;
        }
        CHECK(compute_c_undef(m, total, obj) == ddtest::brute_c_undef(m, total, obj));
      }
    }
  }
}

TEST_CASE("c_undef on a nowhere-defined measure is an error") {
  Measure never{"never", "-", "defined nowhere",
                [](const ConfusionCounts&) { return Rational(0); },
                [](const ConfusionCounts&) { return false; }};
  CHECK_THROWS_AS(compute_c_undef(never, 4, Objective::kMaximize),
                  std::domain_error);
}

TEST_CASE("eval_measure substitutes c_undef exactly on undefined inputs") {
  const auto& reg = MeasureRegistry::builtin();
  const auto& tpr = reg.require("tpr");
  Rational c_undef = compute_c_undef(tpr, 4, Objective::kMinimize);
  CHECK(c_undef == Rational(1));
  CHECK(eval_measure(tpr, {0, 0, 0, 4}, Objective::kMinimize, c_undef) == Rational(1));
  const auto& prec = reg.require("precision");
  Rational c0 = compute_c_undef(prec, 4, Objective::kMaximize);
  CHECK(c0 == Rational(0));
  CHECK(eval_measure(prec, {0, 0, 2, 2}, Objective::kMaximize, c0) == Rational(0));
  CHECK(eval_measure(reg.require("accuracy"), {2, 0, 1, 0}, Objective::kMaximize,
                     Rational(0)) == Rational(2, 3));
}

TEST_CASE("c_undef dominates every defined value") {
  const auto& reg = MeasureRegistry::builtin();
  for (const auto& m : reg.all()) {
    for (std::size_t total = 1; total <= 12; ++total) {
      if (!defined_somewhere(m, total)) continue;
      Rational lo = compute_c_undef(m, total, Objective::kMaximize);
      Rational hi = compute_c_undef(m, total, Objective::kMinimize);
      for (std::size_t p = 0; p <= total; ++p) {
        for (std::size_t tp = 0; tp <= p; ++tp) {
          for (std::size_t fp = 0; fp <= total - p; ++fp) {
            ConfusionCounts c{tp, fp, p - tp, total - p - fp};
            if (!m.defined(c)) continue;
            CHECK(m.eval(c) >= lo);
            CHECK(m.eval(c) <= hi);
          }
        }
      }
    }
  }
}

TEST_CASE("registry measures are positional-invariant") {
  const auto& reg = MeasureRegistry::builtin();
  for (const auto& m : reg.all()) {
    auto r3 = is_positional_invariant(lift_measure(m, 3, Objective::kMaximize), 3,
                                      1, 0);
    CHECK(r3.invariant);
    auto r7 = is_positional_invariant(lift_measure(m, 7, Objective::kMaximize), 7,
                                      1000, 42);
    CHECK(r7.invariant);
  }
  auto acc5 = is_positional_invariant(
      lift_measure(reg.require("accuracy"), 5, Objective::kMaximize), 5, 1000, 7);
  CHECK(acc5.invariant);
}

TEST_CASE("first-position fixture is rejected with a counterexample") {
  auto result = is_positional_invariant(ddtest::first_position_measure(), 2, 100, 1);
  REQUIRE_FALSE(result.invariant);
  REQUIRE(result.counterexample.has_value());
  const auto& ce = *result.counterexample;
  // the counterexample really breaks invariance
  auto mu = ddtest::first_position_measure();
  std::vector<std::uint8_t> pb(ce.pred.size()), ab(ce.pred.size());
  for (std::size_t i = 0; i < ce.pred.size(); ++i) {
    pb[i] = ce.pred[ce.perm[i]];
    ab[i] = ce.actual[ce.perm[i]];
  }
  CHECK(mu(ce.pred, ce.actual) != mu(LabelVector(pb), LabelVector(ab)));
}

TEST_CASE("registration gate rejects duplicates and keeps invariant measures") {
  MeasureRegistry reg;
  Measure m{"twice_tp", "2*tp/M", "always defined",
            [](const ConfusionCounts& c) {
              return Rational(2 * static_cast<long>(c.tp),
                              static_cast<long>(c.total()));
            },
            [](const ConfusionCounts&) { return true; }};
  reg.register_measure(m);
  CHECK(reg.find("twice_tp") != nullptr);
  CHECK_THROWS_AS(reg.register_measure(m), std::invalid_argument);
}
