#pragma once

#include <cstddef>

#include "dutchdraw/rational.hpp"

namespace dutchdraw {

/// Exact binomial coefficient C(n, k); returns 0 when k > n so that sums over
/// out-of-support indices vanish.
mpz_class binom(std::size_t n, std::size_t k);

/// Population size M, positives P in the population, draw size j.
struct HypergeomParams {
  std::size_t population;  // M
  std::size_t positives;   // P, 0 <= P <= M
  std::size_t draws;       // j, 0 <= j <= M

  void validate() const;
};

/// P(TP = tp) when a prediction with exactly `draws` ones is drawn uniformly
/// against a label vector with `positives` ones:
/// C(P,tp) * C(M-P, j-tp) / C(M,j). Exactly zero outside the support.
Rational hypergeom_pmf(const HypergeomParams& p, std::size_t tp);

/// C(M,j) * theta^j * (1-theta)^(M-j), exact for rational theta.
Rational binom_pmf(std::size_t m, const Rational& theta, std::size_t j);

}  // namespace dutchdraw
