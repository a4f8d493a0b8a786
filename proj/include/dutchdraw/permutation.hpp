#pragma once

#include <cstddef>
#include <vector>

#include "dutchdraw/labels.hpp"
#include "dutchdraw/rng.hpp"

namespace dutchdraw {

/// Bijection on {0,...,M-1} stored as its one-line image.
class Permutation {
 public:
  /// Validates bijectivity; throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t m);
  static Permutation random(std::size_t m, SplitMix64& rng);

  /// All M! permutations. Guarded at M <= 8.
  static std::vector<Permutation> all(std::size_t m);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  Permutation compose(const Permutation& other) const;  // this after other

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image_ < b.image_;
  }

 private:
  std::vector<std::size_t> image_;
};

/// Element i of the output is element p(i) of the input: for v = (a,b,c) and
/// one-line image (2,3,1) in 1-based terms the result is (b,c,a).
LabelVector permute(const LabelVector& v, const Permutation& p);

}  // namespace dutchdraw
