#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gluing/exact_int.hpp"

namespace gluing {

/// Face-size profile (m_1, ..., m_k) of a gluing: the i-th polygon has m_i
/// edges. Parts are positive and sum to an even total 2n. The single part
/// [0] is reserved for the trivial map (one vertex, no edges).
class Composition {
 public:
  explicit Composition(std::vector<std::uint32_t> parts)
      : parts_(std::move(parts)) {
    if (parts_.empty()) {
      throw contract_violation("Composition: no parts");
    }
    if (parts_.size() == 1 && parts_[0] == 0) {
      return;
    }
    for (auto m : parts_) {
      if (m == 0) {
        throw contract_violation("Composition: part must be positive");
      }
    }
    if (total() % 2 != 0) {
      throw contract_violation("Composition: total must be even");
    }
  }

  static Composition trivial() { return Composition({0}); }

  bool is_trivial() const { return parts_.size() == 1 && parts_[0] == 0; }

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::uint32_t operator[](std::size_t i) const { return parts_[i]; }

  std::uint32_t total() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint32_t{0});
  }
  std::uint32_t edges() const { return total() / 2; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      s += (i ? "," : "") + std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

/// All compositions of `total` into `k` positive parts, lexicographic.
inline std::vector<Composition> compositions(std::uint32_t total,
                                             std::uint32_t k) {
  std::vector<Composition> out;
  if (k == 0 || total < k) {
    return out;
  }
  std::vector<std::uint32_t> parts(k, 1);
  parts[k - 1] = total - (k - 1);
  for (;;) {
    out.emplace_back(parts);
    // Advance: find the rightmost position i < k-1 that can grow while the
    // suffix is reset to its minimum.
    std::size_t i = k - 1;
    while (i > 0) {
      --i;
      std::uint32_t prefix = 0;
      for (std::size_t j = 0; j <= i; ++j) prefix += parts[j];
      std::uint32_t rest = total - prefix;  // sum of parts[i+1..k-1]
      std::uint32_t slots = static_cast<std::uint32_t>(k - 1 - i);
      if (rest > slots) {
        ++parts[i];
        for (std::size_t j = i + 1; j + 1 < k; ++j) parts[j] = 1;
        parts[k - 1] = rest - 1 - (slots - 1);
        break;
      }
      if (i == 0) {
        return out;
      }
    }
    if (k == 1) {
      return out;
    }
  }
}

}  // namespace gluing
