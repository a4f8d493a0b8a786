#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dutchdraw {

/// Immutable binary sequence of length M >= 1.
class LabelVector {
 public:
  explicit LabelVector(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters, e.g. "0101".
  static LabelVector from_bits(const std::string& bits);

  /// Canonical representative with `ones` leading ones and trailing zeros.
  static LabelVector sorted(std::size_t m, std::size_t ones);

  std::size_t size() const { return bits_.size(); }
  std::size_t ones() const { return ones_; }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::string to_string() const;

  friend bool operator==(const LabelVector& a, const LabelVector& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t ones_;
};

/// Confusion-matrix cell counts; tp + fp + fn + tn = M.
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  std::size_t actual_positives() const { return tp + fn; }
  std::size_t predicted_positives() const { return tp + fp; }

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// Tabulates (tp, fp, fn, tn). Throws std::invalid_argument("dimension
/// mismatch") when lengths differ.
ConfusionCounts confusion(const LabelVector& pred, const LabelVector& actual);

}  // namespace dutchdraw
