#include "dutchdraw/rng.hpp"

namespace dutchdraw {

std::uint64_t SplitMix64::bounded(std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = ~0ULL - (~0ULL % n);
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % n;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  g.next();
  return g.next();
}

}  // namespace dutchdraw
