#pragma once

#include <cstddef>
#include <cstdint>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "gluing/composition.hpp"
#include "gluing/exact_int.hpp"
#include "gluing/permutation.hpp"

namespace gluing {

/// Face permutation whose cycles are the consecutive blocks
/// (1 .. m_1)(m_1+1 .. m_1+m_2)... of the composition.
inline Permutation canonical_tau(const Composition& faces) {
  if (faces.is_trivial()) {
    return Permutation();
  }
  std::vector<Arc> images(faces.total());
  Arc start = 1;
  for (auto m : faces.parts()) {
    for (Arc j = 0; j < m; ++j) {
      images[start + j - 1] = start + (j + 1) % m;
    }
    start += m;
  }
  return Permutation(std::move(images));
}

/// True iff <iota, tau> acts transitively on {1, ..., size}. The empty set
/// counts as transitive (the trivial map).
inline bool is_transitive(const Permutation& iota, const Permutation& tau) {
  if (iota.size() != tau.size()) {
    throw contract_violation("is_transitive: size mismatch");
  }
  const std::size_t size = iota.size();
  if (size == 0) {
    return true;
  }
  // Generators are permutations of a finite set, so forward closure already
  // contains the inverse images.
  std::vector<bool> seen(size + 1, false);
  std::vector<Arc> queue{1};
  seen[1] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Arc x = queue[head];
    for (Arc y : {iota(x), tau(x)}) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == size;
}

/// A connected marked map in canonical arc numbering: face i occupies the
/// i-th consecutive block of arcs, starting at its marked arc. Immutable.
class MarkedMap {
 public:
  /// Validates that iota is a fixed-point-free involution on {1, ..., 2n}
  /// and that <iota, tau> is transitive.
  MarkedMap(Composition faces, Permutation iota)
      : faces_(std::move(faces)), iota_(std::move(iota)) {
    if (faces_.is_trivial()) {
      if (iota_.size() != 0) {
        throw contract_violation("MarkedMap: trivial map must have no arcs");
      }
      return;
    }
    if (iota_.size() != faces_.total()) {
      throw contract_violation("MarkedMap: iota size differs from face total");
    }
    if (!iota_.is_fixed_point_free_involution()) {
      throw contract_violation(
          "MarkedMap: iota is not a fixed-point-free involution");
    }
    tau_ = canonical_tau(faces_);
    if (!is_transitive(iota_, tau_)) {
      throw contract_violation("MarkedMap: gluing is disconnected");
    }
  }

  /// The sphere with one marked vertex and no edges.
  static MarkedMap trivial() {
    return MarkedMap(Composition::trivial(), Permutation());
  }

  bool is_trivial() const { return faces_.is_trivial(); }
  std::size_t edges() const { return iota_.size() / 2; }
  std::size_t face_count() const { return faces_.size(); }
  const Composition& faces() const { return faces_; }
  const Permutation& iota() const { return iota_; }
  const Permutation& tau() const { return tau_; }

  /// Vertex permutation sigma = tau iota.
  Permutation sigma() const { return compose(tau_, iota_); }

  /// `n=<int>; faces=[m1,...,mk]; iota=[(a,b),...]`, pairs sorted by first
  /// element. The trivial map is `n=0; faces=[0]; iota=[]`.
  std::string serialize() const {
    std::string s = "n=" + std::to_string(edges()) +
                    "; faces=" + faces_.to_string() + "; iota=[";
    bool first = true;
    for (Arc x = 1; x <= iota_.size(); ++x) {
      Arc y = iota_(x);
      if (x < y) {
        s += (first ? "(" : ",(") + std::to_string(x) + "," +
             std::to_string(y) + ")";
        first = false;
      }
    }
    return s + "]";
  }

  static MarkedMap parse(const std::string& text) {
    static const std::regex shape(
        R"(^n=(\d+); faces=\[([0-9,]*)\]; iota=\[((?:\(\d+,\d+\),?)*)\]$)");
    std::smatch m;
    if (!std::regex_match(text, m, shape)) {
      throw argument_error("MarkedMap::parse: malformed '" + text + "'");
    }
    std::vector<std::uint32_t> parts;
    {
      std::string list = m[2];
      static const std::regex num(R"(\d+)");
      for (auto it = std::sregex_iterator(list.begin(), list.end(), num);
           it != std::sregex_iterator(); ++it) {
        parts.push_back(static_cast<std::uint32_t>(std::stoul(it->str())));
      }
    }
    Composition faces(std::move(parts));
    std::vector<Cycle> pairs;
    {
      std::string list = m[3];
      static const std::regex pair(R"(\((\d+),(\d+)\))");
      for (auto it = std::sregex_iterator(list.begin(), list.end(), pair);
           it != std::sregex_iterator(); ++it) {
        pairs.push_back({static_cast<Arc>(std::stoul((*it)[1].str())),
                         static_cast<Arc>(std::stoul((*it)[2].str()))});
      }
    }
    std::size_t size = faces.is_trivial() ? 0 : faces.total();
    MarkedMap map(std::move(faces), Permutation::from_cycles(size, pairs));
    if (map.edges() != std::stoul(m[1].str())) {
      throw argument_error("MarkedMap::parse: edge count mismatch");
    }
    return map;
  }

  friend bool operator==(const MarkedMap& a, const MarkedMap& b) {
    return a.faces_ == b.faces_ && a.iota_ == b.iota_;
  }

 private:
  Composition faces_;
  Permutation iota_;
  Permutation tau_;
};

/// Genus from Euler's formula: v - n + k = 2 - 2g with v = cycles(tau iota).
inline int genus_of(const MarkedMap& map) {
  if (map.is_trivial()) {
    return 0;
  }
  const auto n = static_cast<std::int64_t>(map.edges());
  const auto k = static_cast<std::int64_t>(map.face_count());
  const auto v = static_cast<std::int64_t>(cycle_count(map.sigma()));
  const std::int64_t twice = n - k + 2 - v;
  if (twice < 0 || twice % 2 != 0) {
    throw internal_error("genus_of: inconsistent Euler characteristic for " +
                         map.serialize());
  }
  return static_cast<int>(twice / 2);
}

}  // namespace gluing
