#pragma once

// Permutations of the arc set {1, ..., size}.
//
// Products follow the functional convention: compose(p, q)(x) = p(q(x)),
// so the right factor acts first. With this reading the vertex permutation
// of a map is sigma = compose(tau, iota).

#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "gluing/exact_int.hpp"

namespace gluing {

/// Arc label. The ground set is 1-based throughout.
using Arc = std::uint32_t;

using Cycle = std::vector<Arc>;

class Permutation {
 public:
  /// The empty permutation (size 0).
  Permutation() = default;

  /// Builds from the image list: images[i] is the image of arc i + 1.
  explicit Permutation(std::vector<Arc> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size() + 1, false);
    for (Arc y : images_) {
      if (y < 1 || y > images_.size() || hit[y]) {
        throw contract_violation("Permutation: images are not a bijection");
      }
      hit[y] = true;
    }
  }

  static Permutation identity(std::size_t size) {
    std::vector<Arc> images(size);
    for (std::size_t i = 0; i < size; ++i) {
      images[i] = static_cast<Arc>(i + 1);
    }
    return Permutation(std::move(images));
  }

  /// Builds from disjoint cycles; elements not mentioned are fixed.
  static Permutation from_cycles(std::size_t size,
                                 const std::vector<Cycle>& cycles) {
    std::vector<Arc> images(size, 0);
    for (const Cycle& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        Arc x = c[i];
        if (x < 1 || x > size || images[x - 1] != 0) {
          throw contract_violation("Permutation::from_cycles: bad cycle");
        }
        images[x - 1] = c[(i + 1) % c.size()];
      }
    }
    for (std::size_t i = 0; i < size; ++i) {
      if (images[i] == 0) {
        images[i] = static_cast<Arc>(i + 1);
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t size() const { return images_.size(); }

  Arc operator()(Arc x) const {
    if (x < 1 || x > images_.size()) {
      throw contract_violation("Permutation: arc out of range");
    }
    return images_[x - 1];
  }

  std::span<const Arc> images() const { return images_; }

  Permutation inverse() const {
    std::vector<Arc> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      inv[images_[i] - 1] = static_cast<Arc>(i + 1);
    }
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i + 1) {
        return false;
      }
    }
    return true;
  }

  bool is_fixed_point_free_involution() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      Arc y = images_[i];
      if (y == i + 1 || images_[y - 1] != i + 1) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Arc> images_;
};

/// compose(p, q)(x) = p(q(x)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw contract_violation("compose: size mismatch");
  }
  std::vector<Arc> images(p.size());
  auto pi = p.images();
  auto qi = q.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = pi[qi[i] - 1];
  }
  return Permutation(std::move(images));
}

/// Cycles in canonical form: each starts at its smallest element and the
/// list is ordered by those smallest elements. Fixed points are included.
inline std::vector<Cycle> cycles(const Permutation& p) {
  std::vector<Cycle> out;
  std::vector<bool> seen(p.size() + 1, false);
  for (Arc start = 1; start <= p.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    Cycle c;
    for (Arc x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::size_t cycle_count(const Permutation& p) {
  std::size_t count = 0;
  std::vector<bool> seen(p.size() + 1, false);
  for (Arc start = 1; start <= p.size(); ++start) {
    if (seen[start]) {
      continue;
    }
    ++count;
    for (Arc x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
    }
  }
  return count;
}

/// Cycle notation including fixed points, e.g. "(1 2 3)(4)"; "()" if empty.
inline std::string to_cycle_string(const Permutation& p) {
  if (p.size() == 0) {
    return "()";
  }
  std::ostringstream os;
  for (const Cycle& c : cycles(p)) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      os << (i ? " " : "") << c[i];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace gluing
