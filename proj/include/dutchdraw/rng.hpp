#pragma once

#include <cstdint>
#include <vector>

namespace dutchdraw {

/// Small counter-friendly generator (splitmix64). Used everywhere randomness
/// is needed so that results are reproducible across platforms; per-trial
/// streams are derived by keyed mixing rather than sequential draws.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased integer in [0, n) via rejection sampling.
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Independent stream key for (seed, index) pairs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t k = static_cast<std::size_t>(rng.bounded(i));
    std::swap(v[i - 1], v[k]);
  }
}

}  // namespace dutchdraw
