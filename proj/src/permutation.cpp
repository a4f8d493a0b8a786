#include "dutchdraw/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dutchdraw {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::size_t> img(m);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::random(std::size_t m, SplitMix64& rng) {
  std::vector<std::size_t> img(m);
  std::iota(img.begin(), img.end(), 0);
  shuffle(img, rng);
  return Permutation(std::move(img));
}

std::vector<Permutation> Permutation::all(std::size_t m) {
  if (m > 8)
    throw std::invalid_argument("permutation enumeration guard: M exceeds 8");
  std::vector<std::size_t> img(m);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> img(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) img[image_[i]] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = other.image_[image_[i]];
  return Permutation(std::move(img));
}

LabelVector permute(const LabelVector& v, const Permutation& p) {
  if (v.size() != p.size())
    throw std::invalid_argument("dimension mismatch");
  std::vector<std::uint8_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[p(i)];
  return LabelVector(std::move(out));
}

}  // namespace dutchdraw
