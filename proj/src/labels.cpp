#include "dutchdraw/labels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dutchdraw {

LabelVector::LabelVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("label vector must be non-empty");
  for (auto b : bits_)
    if (b > 1) throw std::invalid_argument("label vector elements must be 0 or 1");
  ones_ = static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

LabelVector LabelVector::from_bits(const std::string& bits) {
  std::vector<std::uint8_t> v;
  v.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("label bit string may only contain 0 and 1");
    v.push_back(c == '1' ? 1 : 0);
  }
  return LabelVector(std::move(v));
}

LabelVector LabelVector::sorted(std::size_t m, std::size_t ones) {
  if (ones > m) throw std::invalid_argument("ones count exceeds length");
  std::vector<std::uint8_t> v(m, 0);
  std::fill(v.begin(), v.begin() + ones, 1);
  return LabelVector(std::move(v));
}

std::string LabelVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s += b ? '1' : '0';
  return s;
}

ConfusionCounts confusion(const LabelVector& pred, const LabelVector& actual) {
  if (pred.size() != actual.size())
    throw std::invalid_argument("dimension mismatch");
  ConfusionCounts c;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] && actual[i]) ++c.tp;
    else if (pred[i] && !actual[i]) ++c.fp;
    else if (!pred[i] && actual[i]) ++c.fn;
    else ++c.tn;
  }
  return c;
}

}  // namespace dutchdraw
