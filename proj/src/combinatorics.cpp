#include "dutchdraw/combinatorics.hpp"

#include <stdexcept>

namespace dutchdraw {

mpz_class binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void HypergeomParams::validate() const {
  if (positives > population)
    throw std::invalid_argument("hypergeom: P > M");
  if (draws > population)
    throw std::invalid_argument("hypergeom: j > M");
}

Rational hypergeom_pmf(const HypergeomParams& p, std::size_t tp) {
  p.validate();
  const std::size_t m = p.population, pos = p.positives, j = p.draws;
  const std::size_t lo = j > m - pos ? j - (m - pos) : 0;
  const std::size_t hi = j < pos ? j : pos;
  if (tp < lo || tp > hi) return Rational(0);
  return Rational(binom(pos, tp) * binom(m - pos, j - tp), binom(m, j));
}

Rational binom_pmf(std::size_t m, const Rational& theta, std::size_t j) {
  if (theta < Rational(0) || theta > Rational(1))
    throw std::invalid_argument("binom_pmf: theta outside [0,1]");
  if (j > m) throw std::invalid_argument("binom_pmf: j > M");
  Rational r(binom(m, j));
  for (std::size_t i = 0; i < j; ++i) r *= theta;
  const Rational q = Rational(1) - theta;
  for (std::size_t i = 0; i < m - j; ++i) r *= q;
  return r;
}

}  // namespace dutchdraw
