#pragma once

// Brute-force ground truth: counts connected gluings by walking every
// fixed-point-free involution iota against the canonical face permutation
// of each composition, testing transitivity and reading off the genus from
// the cycle count of tau iota.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gluing/composition.hpp"
#include "gluing/exact_int.hpp"
#include "gluing/genus_table.hpp"
#include "gluing/involutions.hpp"
#include "gluing/marked_map.hpp"

namespace gluing {

/// Hard ceiling of the enumeration kernel (64-bit arc masks, 64-bit
/// per-chunk counters: 31!! < 2^64).
inline constexpr std::size_t kOracleHardLimit = 32;

struct OracleOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Requests with 2n above this are refused unless `force` is set.
  std::size_t max_two_n = 16;
  bool force = false;
  /// If set, incremented by the number of involutions processed.
  std::atomic<std::uint64_t>* progress = nullptr;
};

inline void check_oracle_cap(std::size_t two_n, const OracleOptions& opts) {
  if (two_n > kOracleHardLimit) {
    throw argument_error("oracle: 2n=" + std::to_string(two_n) +
                         " exceeds the kernel limit of " +
                         std::to_string(kOracleHardLimit));
  }
  if (two_n > opts.max_two_n && !opts.force) {
    throw argument_error("oracle: 2n=" + std::to_string(two_n) +
                         " exceeds the cap " + std::to_string(opts.max_two_n) +
                         " (use force to override)");
  }
}

namespace detail {

struct FaceLayout {
  std::array<std::uint8_t, kOracleHardLimit> next{};  // tau, 0-based
  std::array<std::uint8_t, kOracleHardLimit> face{};  // face index of arc
  std::uint32_t k = 0;
};

inline FaceLayout make_layout(const Composition& c) {
  FaceLayout layout;
  layout.k = static_cast<std::uint32_t>(c.size());
  std::uint32_t start = 0;
  for (std::uint32_t f = 0; f < c.size(); ++f) {
    const std::uint32_t m = c[f];
    for (std::uint32_t j = 0; j < m; ++j) {
      layout.next[start + j] = static_cast<std::uint8_t>(start + (j + 1) % m);
      layout.face[start + j] = static_cast<std::uint8_t>(f);
    }
    start += m;
  }
  return layout;
}

/// Per-layout genus histograms, indexed [layout][genus].
using Histogram = std::vector<std::vector<std::uint64_t>>;

/// Faces are joined by edges; the gluing is connected iff the face graph is.
inline bool faces_connected(const FaceLayout& layout, const std::uint8_t* iota,
                            std::size_t two_n) {
  if (layout.k == 1) {
    return true;
  }
  std::array<std::uint64_t, kOracleHardLimit> adj{};
  for (std::size_t x = 0; x < two_n; ++x) {
    adj[layout.face[x]] |= std::uint64_t{1} << layout.face[iota[x]];
  }
  std::uint64_t reach = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t grown = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      grown |= adj[static_cast<std::size_t>(__builtin_ctzll(f))];
    }
    frontier = grown & ~reach;
    reach |= grown;
  }
  return reach == (layout.k == 64 ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << layout.k) - 1);
}

inline std::uint32_t vertex_count(const FaceLayout& layout,
                                  const std::uint8_t* iota, std::size_t two_n) {
  std::uint64_t seen = 0;
  std::uint32_t v = 0;
  for (std::size_t start = 0; start < two_n; ++start) {
    if (seen >> start & 1) {
      continue;
    }
    ++v;
    std::size_t x = start;
    do {
      seen |= std::uint64_t{1} << x;
      x = layout.next[iota[x]];
    } while (x != start);
  }
  return v;
}

inline void run_substream(std::size_t two_n, std::vector<std::uint32_t> prefix,
                          std::span<const FaceLayout> layouts, Histogram& hist,
                          std::atomic<std::uint64_t>* progress) {
  const auto n = static_cast<std::int64_t>(two_n / 2);
  InvolutionStream stream(two_n, std::move(prefix));
  std::array<std::uint8_t, kOracleHardLimit> iota{};
  std::uint64_t processed = 0;
  while (stream.next()) {
    auto images = stream.images();
    for (std::size_t x = 0; x < two_n; ++x) {
      iota[x] = static_cast<std::uint8_t>(images[x] - 1);
    }
    for (std::size_t li = 0; li < layouts.size(); ++li) {
      const FaceLayout& layout = layouts[li];
      if (!faces_connected(layout, iota.data(), two_n)) {
        continue;
      }
      const std::int64_t v = vertex_count(layout, iota.data(), two_n);
      const std::int64_t twice = n - layout.k + 2 - v;
      if (twice < 0 || twice % 2 != 0) {
        throw internal_error("oracle: odd or negative Euler genus");
      }
      ++hist[li][static_cast<std::size_t>(twice / 2)];
    }
    if (progress && (++processed & 0xfff) == 0) {
      progress->fetch_add(0x1000, std::memory_order_relaxed);
    }
  }
  if (progress) {
    progress->fetch_add(processed & 0xfff, std::memory_order_relaxed);
  }
}

}  // namespace detail

/// Genus tables for several compositions sharing the same total 2n, from a
/// single pass over the involutions of {1, ..., 2n}. Results do not depend
/// on the thread count.
inline std::vector<GenusTable> count_compositions(
    std::span<const Composition> comps, const OracleOptions& opts = {}) {
  std::vector<GenusTable> out(comps.size());
  if (comps.empty()) {
    return out;
  }
  const std::size_t two_n = comps.front().total();
  for (const auto& c : comps) {
    if (c.is_trivial() || c.total() != two_n) {
      throw contract_violation(
          "count_compositions: compositions must share a positive total");
    }
  }
  check_oracle_cap(two_n, opts);

  std::vector<detail::FaceLayout> layouts;
  layouts.reserve(comps.size());
  for (const auto& c : comps) layouts.push_back(detail::make_layout(c));

  unsigned threads = opts.threads ? opts.threads
                                  : std::max(1u, std::thread::hardware_concurrency());
  // First pairing choice gives 2n-1 branches; split one level deeper when
  // there are enough threads to need balancing.
  const std::size_t depth = (threads > 1 && two_n >= 6) ? 2 : 1;
  const auto prefixes = InvolutionStream::split(two_n, depth);
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, prefixes.size()));

  const std::size_t genus_slots = two_n / 4 + 2;
  auto fresh = [&] {
    return detail::Histogram(comps.size(),
                             std::vector<std::uint64_t>(genus_slots, 0));
  };
  std::vector<detail::Histogram> partial(threads, fresh());
  std::atomic<std::size_t> next_task{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&](unsigned id) {
    try {
      for (;;) {
        const std::size_t task = next_task.fetch_add(1);
        if (task >= prefixes.size()) {
          break;
        }
        detail::run_substream(two_n, prefixes[task], layouts, partial[id],
                              opts.progress);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }

  for (const auto& hist : partial) {
    for (std::size_t li = 0; li < comps.size(); ++li) {
      for (std::size_t g = 0; g < genus_slots; ++g) {
        out[li].add(static_cast<int>(g), ExactInt(hist[li][g]));
      }
    }
  }
  return out;
}

/// epsilon_g(m_1, ..., m_k; k) for all g.
inline GenusTable count_refined(const Composition& c,
                                const OracleOptions& opts = {}) {
  if (c.is_trivial()) {
    return GenusTable{{0, 1}};
  }
  return count_compositions(std::span<const Composition>(&c, 1), opts)[0];
}

/// Genus tables for every composition of 2n into k parts.
inline RefinedTable count_all_refined(std::uint32_t n, std::uint32_t k,
                                      const OracleOptions& opts = {}) {
  RefinedTable out;
  if (n == 0) {
    if (k == 1) out.emplace(Composition::trivial(), GenusTable{{0, 1}});
    return out;
  }
  const auto comps = compositions(2 * n, k);
  if (comps.empty()) {
    return out;
  }
  auto tables = count_compositions(comps, opts);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    out.emplace(comps[i], std::move(tables[i]));
  }
  return out;
}

/// epsilon_g(n, k) for all g; epsilon_0(0, 1) = 1.
inline GenusTable count_total(std::uint32_t n, std::uint32_t k,
                              const OracleOptions& opts = {}) {
  GenusTable total;
  for (const auto& [c, table] : count_all_refined(n, k, opts)) total += table;
  return total;
}

/// Counts keyed by (size of face 1, genus).
inline std::map<std::pair<std::uint32_t, int>, ExactInt> count_by_face1_degree(
    std::uint32_t n, std::uint32_t k, const OracleOptions& opts = {}) {
  std::map<std::pair<std::uint32_t, int>, ExactInt> out;
  for (const auto& [c, table] : count_all_refined(n, k, opts)) {
    for (const auto& [g, v] : table.entries()) out[{c[0], g}] += v;
  }
  return out;
}

/// Calls f(const MarkedMap&, int genus) for every connected marked map with
/// n edges and k faces, in composition-then-involution order. Serial.
template <class F>
void for_each_marked_map(std::uint32_t n, std::uint32_t k, F&& f) {
  if (n == 0) {
    if (k == 1) f(MarkedMap::trivial(), 0);
    return;
  }
  for (const auto& c : compositions(2 * n, k)) {
    const Permutation tau = canonical_tau(c);
    InvolutionStream stream(2 * n);
    while (stream.next()) {
      Permutation iota = stream.permutation();
      if (!is_transitive(iota, tau)) {
        continue;
      }
      MarkedMap map(c, std::move(iota));
      const int g = genus_of(map);
      f(map, g);
    }
  }
}

/// All connected marked maps of genus g with n edges and k faces.
inline std::vector<MarkedMap> enumerate_maps(int g, std::uint32_t n,
                                             std::uint32_t k) {
  std::vector<MarkedMap> out;
  if (g < 0) {
    return out;
  }
  for_each_marked_map(n, k, [&](const MarkedMap& m, int genus) {
    if (genus == g) out.push_back(m);
  });
  return out;
}

}  // namespace gluing
