#pragma once

// Deleting the edge that carries mark 1 from a connected marked map.
//
// Let e1 be the arc marked 1 and f1 = iota(e1). The face permutation of the
// smaller map skips over e1 and f1 (tau_prime). Depending on where e1 and f1
// sit, the result is
//   - FaceMerge: e1 and f1 on different faces; those faces merge
//                (n edges, k - 1 faces, same genus);
//   - GenusDrop: e1 and f1 on one face, not consecutive, remaining graph
//                connected (k + 1 faces, genus g - 1);
//   - Split:     e1 and f1 on one face and the remaining graph falls apart.
//                When e1 and f1 are consecutive the degree-1 endpoint is kept
//                as a trivial map, so this case is also reported as an
//                ordered pair.
// Every result is re-marked and returned in canonical arc numbering.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gluing/exact_int.hpp"
#include "gluing/marked_map.hpp"
#include "gluing/permutation.hpp"

namespace gluing {

/// A bijection of a subset of {1, ..., universe}. image(x) == 0 means x is
/// not in the domain.
class PartialPermutation {
 public:
  PartialPermutation() = default;

  /// `image` is indexed by arc label; index 0 is unused.
  explicit PartialPermutation(std::vector<Arc> image) : image_(std::move(image)) {
    if (image_.empty()) {
      image_.push_back(0);
    }
    std::vector<bool> hit(image_.size(), false);
    for (std::size_t x = 1; x < image_.size(); ++x) {
      Arc y = image_[x];
      if (y == 0) {
        continue;
      }
      if (y >= image_.size() || image_[y] == 0 || hit[y]) {
        throw contract_violation("PartialPermutation: not a bijection");
      }
      hit[y] = true;
    }
  }

  static PartialPermutation from(const Permutation& p) {
    std::vector<Arc> image(p.size() + 1, 0);
    for (Arc x = 1; x <= p.size(); ++x) image[x] = p(x);
    return PartialPermutation(std::move(image));
  }

  std::size_t universe() const { return image_.size() - 1; }

  bool contains(Arc x) const {
    return x >= 1 && x < image_.size() && image_[x] != 0;
  }

  Arc operator()(Arc x) const {
    if (!contains(x)) {
      throw contract_violation("PartialPermutation: arc outside the domain");
    }
    return image_[x];
  }

  std::vector<Arc> domain() const {
    std::vector<Arc> out;
    for (Arc x = 1; x < image_.size(); ++x) {
      if (image_[x] != 0) out.push_back(x);
    }
    return out;
  }

  /// Canonical cycles (smallest element first, ordered by it).
  std::vector<Cycle> cycles() const {
    std::vector<Cycle> out;
    std::vector<bool> seen(image_.size(), false);
    for (Arc s = 1; s < image_.size(); ++s) {
      if (image_[s] == 0 || seen[s]) continue;
      Cycle c;
      for (Arc x = s; !seen[x]; x = image_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  friend bool operator==(const PartialPermutation&,
                         const PartialPermutation&) = default;

 private:
  std::vector<Arc> image_{0};
};

/// Face permutation after deleting the edge {e1, iota(e1)}:
///   tau(x)    if tau(x) survives;
///   tau(f1)   if (tau(x) = e1 and tau(f1) != f1) or (tau(x) = f1 and tau(e1) = e1);
///   tau(e1)   if (tau(x) = e1 and tau(f1) = f1) or (tau(x) = f1 and tau(e1) != e1).
inline PartialPermutation tau_prime(const Permutation& iota,
                                    const Permutation& tau, Arc e1) {
  if (iota.size() != tau.size()) {
    throw contract_violation("tau_prime: size mismatch");
  }
  const Arc f1 = iota(e1);
  if (f1 == e1) {
    throw contract_violation("tau_prime: e1 is fixed by iota");
  }
  std::vector<Arc> image(tau.size() + 1, 0);
  for (Arc x = 1; x <= tau.size(); ++x) {
    if (x == e1 || x == f1) continue;
    const Arc t = tau(x);
    if (t != e1 && t != f1) {
      image[x] = t;
    } else if ((t == e1 && tau(f1) != f1) || (t == f1 && tau(e1) == e1)) {
      image[x] = tau(f1);
    } else {
      image[x] = tau(e1);
    }
  }
  return PartialPermutation(std::move(image));
}

/// A marked map on an arbitrary arc set: face i + 1 is the tau-cycle through
/// marks[i]. An empty arc set with no marks denotes the trivial map.
struct RawMap {
  PartialPermutation iota;
  PartialPermutation tau;
  std::vector<Arc> marks;
};

/// Relabels arcs to {1, ..., 2n}, walking face 1 from its marked arc in tau
/// order, then face 2, and so on.
inline MarkedMap canonicalize(const RawMap& raw) {
  const auto domain = raw.tau.domain();
  if (raw.iota.domain() != domain) {
    throw contract_violation("canonicalize: iota and tau domains differ");
  }
  if (domain.empty()) {
    if (!raw.marks.empty()) {
      throw contract_violation("canonicalize: marks on an empty arc set");
    }
    return MarkedMap::trivial();
  }
  if (raw.marks.empty()) {
    throw contract_violation("canonicalize: no marked arcs");
  }
  std::vector<Arc> label(raw.tau.universe() + 1, 0);
  std::vector<std::uint32_t> sizes;
  Arc next = 1;
  for (Arc mark : raw.marks) {
    if (!raw.tau.contains(mark)) {
      throw contract_violation("canonicalize: marked arc not in the map");
    }
    if (label[mark] != 0) {
      throw contract_violation("canonicalize: two marks on one face");
    }
    std::uint32_t size = 0;
    Arc x = mark;
    do {
      label[x] = next++;
      ++size;
      x = raw.tau(x);
    } while (x != mark);
    sizes.push_back(size);
  }
  if (next - 1 != domain.size()) {
    throw contract_violation("canonicalize: a face carries no mark");
  }
  std::vector<Arc> iota(domain.size());
  for (Arc x : domain) iota[label[x] - 1] = label[raw.iota(x)];
  return MarkedMap(Composition(std::move(sizes)), Permutation(std::move(iota)));
}

struct FaceMerge {
  MarkedMap map;
};
struct GenusDrop {
  MarkedMap map;
};
struct Split {
  MarkedMap first;
  MarkedMap second;
};

using SurgeryResult = std::variant<FaceMerge, GenusDrop, Split>;

/// Which branch of the deletion a map falls into.
enum class DeletionCase {
  kDistinctFaces,     // e1, f1 on different faces
  kConsecutive,       // same face, consecutive arcs (degree-1 endpoint)
  kSameFaceConnected, // same face, remaining graph connected
  kSameFaceSplit,     // same face, remaining graph disconnected
};

namespace detail {

struct FaceData {
  std::vector<std::size_t> face_of;  // arc label -> 0-based face index
  std::vector<Arc> marks;            // face index -> marked arc
};

inline FaceData face_data(const MarkedMap& m) {
  FaceData d;
  d.face_of.assign(m.iota().size() + 1, 0);
  Arc start = 1;
  for (std::size_t f = 0; f < m.face_count(); ++f) {
    d.marks.push_back(start);
    for (Arc j = 0; j < m.faces()[f]; ++j) d.face_of[start + j] = f;
    start += m.faces()[f];
  }
  return d;
}

/// Arcs strictly between `from` and `to` along tau.
inline std::vector<Arc> tau_run(const Permutation& tau, Arc from, Arc to) {
  std::vector<Arc> run;
  for (Arc x = tau(from); x != to; x = tau(x)) run.push_back(x);
  return run;
}

/// Component label of each surviving arc under <iota', tau'>.
inline std::vector<int> components(const PartialPermutation& iota,
                                   const PartialPermutation& tau) {
  std::vector<int> comp(tau.universe() + 1, -1);
  int count = 0;
  for (Arc s : tau.domain()) {
    if (comp[s] >= 0) continue;
    std::vector<Arc> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      Arc x = stack.back();
      stack.pop_back();
      for (Arc y : {iota(x), tau(x)}) {
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return comp;
}

inline PartialPermutation restrict_to(const Permutation& p, Arc drop_a,
                                      Arc drop_b) {
  std::vector<Arc> image(p.size() + 1, 0);
  for (Arc x = 1; x <= p.size(); ++x) {
    if (x != drop_a && x != drop_b) image[x] = p(x);
  }
  return PartialPermutation(std::move(image));
}

/// Keeps only the arcs whose component is `keep`.
inline PartialPermutation restrict_component(const PartialPermutation& p,
                                             const std::vector<int>& comp,
                                             int keep) {
  std::vector<Arc> image(p.universe() + 1, 0);
  for (Arc x : p.domain()) {
    if (comp[x] == keep) image[x] = p(x);
  }
  return PartialPermutation(std::move(image));
}

}  // namespace detail

inline DeletionCase classify_deletion(const MarkedMap& m) {
  if (m.is_trivial()) {
    throw contract_violation("classify_deletion: map has no edges");
  }
  const Arc e1 = 1;
  const Arc f1 = m.iota()(e1);
  const auto data = detail::face_data(m);
  if (data.face_of[e1] != data.face_of[f1]) {
    return DeletionCase::kDistinctFaces;
  }
  const auto a = detail::tau_run(m.tau(), e1, f1);
  const auto b = detail::tau_run(m.tau(), f1, e1);
  if (a.empty() || b.empty()) {
    return DeletionCase::kConsecutive;
  }
  const auto comp = detail::components(detail::restrict_to(m.iota(), e1, f1),
                                       tau_prime(m.iota(), m.tau(), e1));
  return comp[a.front()] == comp[b.front()] ? DeletionCase::kSameFaceConnected
                                            : DeletionCase::kSameFaceSplit;
}

/// Deletes the edge carrying mark 1. The input must be a connected marked
/// map with at least one edge (MarkedMap guarantees connectivity).
inline SurgeryResult delete_marked_edge(const MarkedMap& m) {
  if (m.is_trivial()) {
    throw contract_violation("delete_marked_edge: map has no edges");
  }
  const Permutation& tau = m.tau();
  const Permutation& iota = m.iota();
  const Arc e1 = 1;
  const Arc f1 = iota(e1);
  const auto data = detail::face_data(m);
  const std::size_t k = m.face_count();
  const PartialPermutation tp = tau_prime(iota, tau, e1);
  const PartialPermutation ip = detail::restrict_to(iota, e1, f1);

  if (data.face_of[e1] != data.face_of[f1]) {
    const std::size_t j = data.face_of[f1];
    Arc merged_mark;
    if (data.marks[j] != f1) {
      merged_mark = data.marks[j];
    } else if (tau(e1) != e1) {
      merged_mark = tau(e1);
    } else {
      merged_mark = tau(f1);
    }
    if (tp.domain().empty()) {
      return FaceMerge{MarkedMap::trivial()};
    }
    RawMap raw{ip, tp, {merged_mark}};
    for (std::size_t f = 1; f < k; ++f) {
      if (f != j) raw.marks.push_back(data.marks[f]);
    }
    return FaceMerge{canonicalize(raw)};
  }

  const auto a = detail::tau_run(tau, e1, f1);
  const auto b = detail::tau_run(tau, f1, e1);

  if (a.empty() || b.empty()) {
    MarkedMap rest = MarkedMap::trivial();
    if (!(a.empty() && b.empty())) {
      RawMap raw{ip, tp, {a.empty() ? b.front() : a.front()}};
      for (std::size_t f = 1; f < k; ++f) raw.marks.push_back(data.marks[f]);
      rest = canonicalize(raw);
    }
    // tau(e1) = f1 means sigma(f1) = f1: f1 leaves the degree-1 vertex, so
    // e1 points into it and the trivial map goes first.
    if (a.empty()) {
      return Split{MarkedMap::trivial(), std::move(rest)};
    }
    return Split{std::move(rest), MarkedMap::trivial()};
  }

  const auto comp = detail::components(ip, tp);
  const int ca = comp[a.front()];
  const int cb = comp[b.front()];
  if (ca == cb) {
    RawMap raw{ip, tp, {a.front()}};
    for (std::size_t f = 1; f < k; ++f) raw.marks.push_back(data.marks[f]);
    raw.marks.push_back(b.front());
    return GenusDrop{canonicalize(raw)};
  }

  auto side = [&](int c, Arc head) {
    RawMap raw{detail::restrict_component(ip, comp, c),
               detail::restrict_component(tp, comp, c),
               {head}};
    for (std::size_t f = 1; f < k; ++f) {
      if (comp[data.marks[f]] == c) raw.marks.push_back(data.marks[f]);
    }
    return canonicalize(raw);
  };
  return Split{side(ca, a.front()), side(cb, b.front())};
}

/// Bucketing key: variant tag plus canonical serialization(s).
inline std::string result_key(const SurgeryResult& r) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FaceMerge>) {
          return "merge: " + v.map.serialize();
        } else if constexpr (std::is_same_v<T, GenusDrop>) {
          return "drop: " + v.map.serialize();
        } else {
          return "split: " + v.first.serialize() + " | " + v.second.serialize();
        }
      },
      r);
}

}  // namespace gluing
