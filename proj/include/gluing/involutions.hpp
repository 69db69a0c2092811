#pragma once

// Enumeration of fixed-point-free involutions (perfect matchings) of
// {1, ..., 2n}.
//
// Order: the smallest unmatched arc is paired with each larger unmatched arc
// in increasing order, recursively. A matching is thus a mixed-radix number
// whose digit at level i (0 <= i < n) ranges over the 2n - 2i - 1 choices
// left at that level. Fixing a prefix of digits selects a contiguous,
// independent sub-stream, which is how work is split across threads.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gluing/exact_int.hpp"
#include "gluing/permutation.hpp"

namespace gluing {

class InvolutionStream {
 public:
  /// Full stream over {1, ..., two_n}.
  explicit InvolutionStream(std::size_t two_n) : InvolutionStream(two_n, {}) {}

  /// Sub-stream whose first prefix.size() pairing choices are fixed.
  InvolutionStream(std::size_t two_n, std::vector<std::uint32_t> prefix)
      : two_n_(two_n), prefix_len_(prefix.size()) {
    if (two_n == 0 || two_n % 2 != 0) {
      throw argument_error("InvolutionStream: size must be even and positive");
    }
    const std::size_t levels = two_n / 2;
    if (prefix.size() > levels) {
      throw argument_error("InvolutionStream: prefix longer than level count");
    }
    digits_.assign(levels, 0);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] >= radix(i)) {
        throw argument_error("InvolutionStream: prefix digit out of range");
      }
      digits_[i] = prefix[i];
    }
    images_.assign(two_n, 0);
    remaining_.resize(levels + 1);
    remaining_[0].resize(two_n);
    for (std::size_t i = 0; i < two_n; ++i) {
      remaining_[0][i] = static_cast<Arc>(i + 1);
    }
  }

  /// Number of choices at pairing level `level`.
  std::uint32_t radix(std::size_t level) const {
    return static_cast<std::uint32_t>(two_n_ - 2 * level - 1);
  }

  /// All digit prefixes of length `depth`, in stream order. Their
  /// sub-streams partition the full stream.
  static std::vector<std::vector<std::uint32_t>> split(std::size_t two_n,
                                                       std::size_t depth) {
    std::vector<std::vector<std::uint32_t>> out{{}};
    for (std::size_t level = 0; level < depth && level < two_n / 2; ++level) {
      const auto r = static_cast<std::uint32_t>(two_n - 2 * level - 1);
      std::vector<std::vector<std::uint32_t>> next;
      next.reserve(out.size() * r);
      for (const auto& p : out) {
        for (std::uint32_t d = 0; d < r; ++d) {
          next.push_back(p);
          next.back().push_back(d);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  /// (two_n - 1)!!
  static ExactInt total_count(std::size_t two_n) {
    return double_factorial(static_cast<std::int64_t>(two_n) - 1);
  }

  /// Advances to the next involution; the first call yields the first one.
  /// Returns false once the stream is exhausted.
  bool next() {
    const std::size_t levels = digits_.size();
    if (!started_) {
      started_ = true;
      rebuild_from(0);
      return true;
    }
    if (done_) {
      return false;
    }
    std::size_t level = levels;
    while (level > prefix_len_) {
      --level;
      if (++digits_[level] < radix(level)) {
        rebuild_from(level);
        return true;
      }
      digits_[level] = 0;
    }
    done_ = true;
    return false;
  }

  /// Current involution as images: images()[x - 1] = iota(x).
  std::span<const Arc> images() const { return images_; }

  Permutation permutation() const { return Permutation(images_); }

  std::size_t size() const { return two_n_; }

 private:
  void rebuild_from(std::size_t level) {
    for (std::size_t lv = level; lv < digits_.size(); ++lv) {
      const auto& rem = remaining_[lv];
      const Arc a = rem[0];
      const Arc b = rem[1 + digits_[lv]];
      images_[a - 1] = b;
      images_[b - 1] = a;
      auto& next = remaining_[lv + 1];
      next.clear();
      for (std::size_t i = 1; i < rem.size(); ++i) {
        if (i != 1 + digits_[lv]) {
          next.push_back(rem[i]);
        }
      }
    }
  }

  std::size_t two_n_;
  std::size_t prefix_len_;
  std::vector<std::uint32_t> digits_;
  std::vector<Arc> images_;
  std::vector<std::vector<Arc>> remaining_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls f(const Permutation&) for every fixed-point-free involution on
/// {1, ..., two_n}, in stream order.
template <class F>
void for_each_involution(std::size_t two_n, F&& f) {
  InvolutionStream stream(two_n);
  while (stream.next()) {
    f(stream.permutation());
  }
}

}  // namespace gluing
