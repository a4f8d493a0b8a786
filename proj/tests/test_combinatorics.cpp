#include <doctest.h>

#include <vector>

#include "dutchdraw/combinatorics.hpp"
#include "test_support.hpp"

using dutchdraw::binom;
using dutchdraw::binom_pmf;
using dutchdraw::hypergeom_pmf;
using dutchdraw::HypergeomParams;
using dutchdraw::Rational;

namespace {

// Pascal-triangle oracle, independent of the multiplicative path.
mpz_class pascal(std::size_t n, std::size_t k) {
  std::vector<std::vector<mpz_class>> rows(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    rows[i].assign(i + 1, 1);
    for (std::size_t j = 1; j < i; ++j)
      rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return k <= n ? rows[n][k] : mpz_class(0);
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(10, 3) == pascal(10, 3));
  CHECK(binom(10, 3) == 120);
  CHECK(binom(3, 5) == 0);  // k > n convention
  for (std::size_t n = 0; n <= 20; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(binom(n, k) == pascal(n, k));
}

TEST_CASE("Pascal recurrence holds") {
  for (std::size_t n = 1; n <= 40; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("hypergeometric pmf matches group enumeration at M=4, P=2, j=2") {
  // six vectors with two ones against Y = (1,1,0,0): four have tp = 1
  const auto actual = dutchdraw::LabelVector::from_bits("1100");
  std::size_t with_tp1 = 0, with_tp2 = 0;
  for (const auto& pred : ddtest::group_vectors(4, 2)) {
    auto c = dutchdraw::confusion(pred, actual);
    if (c.tp == 1) ++with_tp1;
    if (c.tp == 2) ++with_tp2;
  }
  CHECK(with_tp1 == 4);
  CHECK(with_tp2 == 1);
  CHECK(hypergeom_pmf({4, 2, 2}, 1) == Rational(2, 3));
  CHECK(hypergeom_pmf({4, 2, 2}, 2) == Rational(1, 6));
  CHECK(hypergeom_pmf({4, 2, 2}, 3) == Rational(0));
  CHECK(hypergeom_pmf({4, 2, 2}, 4) == Rational(0));
}

TEST_CASE("hypergeometric pmf parameter validation") {
  CHECK_THROWS_AS(hypergeom_pmf({4, 5, 2}, 0), std::invalid_argument);
  CHECK_THROWS_AS(hypergeom_pmf({4, 2, 5}, 0), std::invalid_argument);
}

TEST_CASE("hypergeometric symmetry pmf(M,P,j,tp) == pmf(M,j,P,tp)") {
  for (std::size_t m = 1; m <= 20; ++m)
    for (std::size_t p = 0; p <= m; ++p)
      for (std::size_t j = 0; j <= m; ++j)
        for (std::size_t tp = 0; tp <= j; ++tp)
          CHECK(hypergeom_pmf({m, p, j}, tp) == hypergeom_pmf({m, j, p}, tp));
}

TEST_CASE("binomial pmf examples") {
  CHECK(binom_pmf(2, Rational(1, 2), 1) == Rational(1, 2));
  CHECK(binom_pmf(3, Rational(1, 3), 0) == Rational(8, 27));
  CHECK(binom_pmf(4, Rational(1, 4), 2) == Rational(27, 128));
  CHECK_THROWS_AS(binom_pmf(4, Rational(3, 2), 1), std::invalid_argument);
}

TEST_CASE("binomial pmf sums to one") {
  for (std::size_t m = 1; m <= 12; ++m) {
    Rational sum(0);
    for (std::size_t j = 0; j <= m; ++j) sum += binom_pmf(m, Rational(2, 7), j);
    CHECK(sum == Rational(1));
  }
}
