#pragma once

// Counts by recurrence:
//   one polygon:    Harer-Zagier,
//                   eps_g(n) = (2n-1)/(n+1) (2 eps_g(n-1) + (n-1)(2n-3) eps_{g-1}(n-2));
//   two polygons:   eps_g(n,2) = eps_{g+1}(n+1) - sum_h sum_i eps_h(i) eps_{g+1-h}(n-i);
//   three polygons: eps_g(n,3) = eps_{g+1}(n+1,2)
//                                - 2 sum_h sum_i eps_h(i) eps_{g+1-h}(n-i,2)
//                                - (n+1)(2n+1) eps_{g+1}(n).
// Both convolutions run over h = 0..g+1 and i = 0..n. Values are memoized
// process-wide behind a mutex.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "gluing/exact_int.hpp"

namespace gluing {

namespace detail {

class RecurrenceMemo {
 public:
  static RecurrenceMemo& instance() {
    static RecurrenceMemo memo;
    return memo;
  }

  ExactInt hz(int g, int n) {
    if (g < 0 || n < 0) return 0;
    std::lock_guard lock(mutex_);
    extend_hz(g, n);
    return hz_[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)];
  }

  ExactInt two_faces(int g, int n) {
    if (g < 0 || n <= 0) return 0;
    {
      std::lock_guard lock(mutex_);
      auto it = two_.find({g, n});
      if (it != two_.end()) return it->second;
    }
    ExactInt value = hz(g + 1, n + 1);
    for (int h = 0; h <= g + 1; ++h) {
      for (int i = 0; i <= n; ++i) {
        value -= hz(h, i) * hz(g + 1 - h, n - i);
      }
    }
    if (value < 0) {
      throw internal_error("eps2_rec: negative count");
    }
    std::lock_guard lock(mutex_);
    two_.emplace(std::make_pair(g, n), value);
    return value;
  }

 private:
  // Fills rows 0..g up to column n. Caller holds the mutex.
  void extend_hz(int g, int n) {
    const auto rows = static_cast<std::size_t>(g) + 1;
    const auto cols = static_cast<std::size_t>(n) + 1;
    if (hz_.size() >= rows && !hz_.empty() && hz_[0].size() >= cols) return;
    const std::size_t new_rows = std::max(rows, hz_.size());
    const std::size_t new_cols = std::max(cols, hz_.empty() ? 0 : hz_[0].size());
    std::vector<std::vector<ExactInt>> table(new_rows,
                                             std::vector<ExactInt>(new_cols, 0));
    for (std::size_t gg = 0; gg < new_rows; ++gg) {
      for (std::size_t nn = 0; nn < new_cols; ++nn) {
        if (nn == 0) {
          table[gg][nn] = gg == 0 ? 1 : 0;
          continue;
        }
        const auto ni = static_cast<std::int64_t>(nn);
        ExactInt inner = 2 * table[gg][nn - 1];
        if (gg >= 1 && nn >= 2) {
          inner += ExactInt((ni - 1) * (2 * ni - 3)) * table[gg - 1][nn - 2];
        }
        table[gg][nn] = exact_div(inner * (2 * ni - 1), ni + 1, "hz_epsilon");
      }
    }
    hz_ = std::move(table);
  }

  std::mutex mutex_;
  std::vector<std::vector<ExactInt>> hz_;
  std::map<std::pair<int, int>, ExactInt> two_;
};

}  // namespace detail

/// One-polygon count eps_g(n); zero for negative arguments.
inline ExactInt hz_epsilon(int g, int n) {
  return detail::RecurrenceMemo::instance().hz(g, n);
}

/// Two-polygon count eps_g(n, 2); eps_g(0, 2) = 0.
inline ExactInt eps2_rec(int g, int n) {
  return detail::RecurrenceMemo::instance().two_faces(g, n);
}

/// Three-polygon count eps_g(n, 3); eps_g(0, 3) = 0.
inline ExactInt eps3_rec(int g, int n) {
  if (g < 0 || n <= 0) return 0;
  ExactInt value = eps2_rec(g + 1, n + 1);
  ExactInt conv = 0;
  for (int h = 0; h <= g + 1; ++h) {
    for (int i = 0; i <= n; ++i) {
      conv += hz_epsilon(h, i) * eps2_rec(g + 1 - h, n - i);
    }
  }
  value -= 2 * conv;
  value -= ExactInt((n + 1) * (2 * n + 1)) * hz_epsilon(g + 1, n);
  if (value < 0) {
    throw internal_error("eps3_rec: negative count");
  }
  return value;
}

/// eps_g(n, k) by recurrence for k in {1, 2, 3}.
inline ExactInt eps_recurrence(int g, int n, int k) {
  switch (k) {
    case 1: return hz_epsilon(g, n);
    case 2: return eps2_rec(g, n);
    case 3: return eps3_rec(g, n);
    default:
      throw argument_error("eps_recurrence: only k = 1, 2, 3 are supported");
  }
}

}  // namespace gluing
