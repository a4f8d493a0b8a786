#include <doctest.h>

#include <cmath>

#include "dutchdraw/combinatorics.hpp"
#include "dutchdraw/rng.hpp"
#include "dutchdraw/simulate.hpp"
#include "test_support.hpp"

using namespace dutchdraw;

TEST_CASE("coin flip expectation") {
  const auto& acc = MeasureRegistry::builtin().require("accuracy");
  CHECK(coin_flip_expectation(4, 2, Rational(1, 2), acc, Objective::kMaximize) ==
        Rational(1, 2));
  // degenerate coins collapse to a single group
  for (std::size_t p = 0; p <= 5; ++p) {
    CHECK(coin_flip_expectation(5, p, Rational(0), acc, Objective::kMaximize) ==
          expected_group_score(5, p, 0, acc, Objective::kMaximize));
    CHECK(coin_flip_expectation(5, p, Rational(1), acc, Objective::kMaximize) ==
          expected_group_score(5, p, 5, acc, Objective::kMaximize));
  }
}

TEST_CASE("coin flip expectation matches mixing the groups by hand") {
  const auto& f1 = MeasureRegistry::builtin().require("f1");
  Rational theta(2, 5);
  Rational by_hand(0);
  for (std::size_t j = 0; j <= 6; ++j)
    by_hand += binom_pmf(6, theta, j) *
               expected_group_score(6, 2, j, f1, Objective::kMaximize);
  CHECK(coin_flip_expectation(6, 2, theta, f1, Objective::kMaximize) == by_hand);
}

TEST_CASE("model parsing") {
  auto coin = ClassifierModel::parse("coin:1/2");
  CHECK(coin.kind == ClassifierModel::Kind::kCoinFlip);
  CHECK(coin.theta == Rational(1, 2));
  auto cst = ClassifierModel::parse("const:0101");
  CHECK(cst.kind == ClassifierModel::Kind::kConstant);
  CHECK(cst.constant->to_string() == "0101");
  auto dd = ClassifierModel::parse("dd:3");
  CHECK(dd.kind == ClassifierModel::Kind::kDutchDraw);
  CHECK(dd.draw_size == 3);
  CHECK_THROWS_AS(ClassifierModel::parse("coin"), std::invalid_argument);
  CHECK_THROWS_AS(ClassifierModel::parse("dd:x"), std::invalid_argument);
  CHECK_THROWS_AS(ClassifierModel::parse("foo:1"), std::invalid_argument);
}

TEST_CASE("constant-count prediction under accuracy scores identically per trial") {
  const auto& acc = MeasureRegistry::builtin().require("accuracy");
  auto model = ClassifierModel::constant_vector(LabelVector::from_bits("0000"));
  auto report = run_simulation(model, 4, 1, acc, Objective::kMaximize, 500, 11);
  CHECK(report.mean_score == 0.75);
  CHECK(report.abs_error == 0.0);
  CHECK(report.std_error == doctest::Approx(0.0));
}

TEST_CASE("simulation is deterministic given the seed") {
  const auto& f1 = MeasureRegistry::builtin().require("f1");
  auto model = ClassifierModel::coin_flip(Rational(1, 3));
  auto a = run_simulation(model, 8, 3, f1, Objective::kMaximize, 2000, 77);
  auto b = run_simulation(model, 8, 3, f1, Objective::kMaximize, 2000, 77);
  CHECK(a.mean_score == b.mean_score);
  CHECK(a.std_error == b.std_error);
  auto c = run_simulation(model, 8, 3, f1, Objective::kMaximize, 2000, 78);
  CHECK(a.mean_score != c.mean_score);
}

TEST_CASE("Monte Carlo means converge to the exact expectation") {
  const auto& acc = MeasureRegistry::builtin().require("accuracy");
  auto dd_model = ClassifierModel::dutch_draw(6);
  auto report = run_simulation(dd_model, 20, 6, acc, Objective::kMaximize, 20000, 3);
  REQUIRE(report.exact_expectation.has_value());
  CHECK(report.abs_error < 4 * std::max(report.std_error, 1e-12));

  auto coin = ClassifierModel::coin_flip(Rational(1, 2));
  auto coin_report = run_simulation(coin, 4, 2, acc, Objective::kMaximize, 20000, 4);
  CHECK(*coin_report.exact_expectation == Rational(1, 2));
  CHECK(coin_report.abs_error < 4 * coin_report.std_error);
}

TEST_CASE("dominance: no input-independent model beats the baseline") {
  DutchDrawSpec spec{10, 3, "accuracy", Objective::kMaximize};
  std::vector<ClassifierModel> models;
  for (const char* theta : {"0", "1/4", "1/2", "3/4", "1"})
    models.push_back(ClassifierModel::coin_flip(Rational::parse(theta)));
  SplitMix64 rng(17);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::uint8_t> bits(10);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bounded(2));
    models.push_back(ClassifierModel::constant_vector(LabelVector(std::move(bits))));
  }
  auto table = dominance_check(models, spec, 0, 0);
  CHECK(table.dd_score == Rational(7, 10));
  CHECK(table.all_within_bound);
  for (const auto& row : table.rows) CHECK(row.exact_expectation <= table.dd_score);
}

TEST_CASE("dominance with an empty model list keeps the baseline row") {
  DutchDrawSpec spec{4, 1, "accuracy", Objective::kMaximize};
  auto table = dominance_check({}, spec, 0, 0);
  CHECK(table.rows.empty());
  CHECK(table.dd_score == Rational(3, 4));
  CHECK(table.all_within_bound);
}

TEST_CASE("model validation") {
  auto model = ClassifierModel::constant_vector(LabelVector::from_bits("01"));
  CHECK_THROWS_AS(model.validate(3), std::invalid_argument);
  CHECK_THROWS_AS(ClassifierModel::dutch_draw(5).validate(4), std::invalid_argument);
  CHECK_THROWS_AS(ClassifierModel::coin_flip(Rational(3, 2)).validate(4),
                  std::invalid_argument);
}
