#pragma once

// Numerator polynomials of the genus generating functions
//
//   C_g(z)     = P_g(z)     / (1 - 4z)^(3g - 1/2)   (g >= 1)
//   C_g^[2](z) = P2_g(z)    / (1 - 4z)^(3g + 2)
//   C_g^[3](z) = P3_g(z)    / (1 - 4z)^(3g + 9/2)
//
// P_g is recovered from the Harer-Zagier numbers by multiplying the series
// back by (1 - 4z)^(3g - 1/2) and checking that the tail vanishes. P2 and P3
// follow from P by polynomial identities.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gluing/exact_int.hpp"
#include "gluing/polynomial.hpp"
#include "gluing/power_series.hpp"
#include "gluing/recurrences.hpp"

namespace gluing {

enum class Family { P, P2, P3 };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::P2: return "P2";
    case Family::P3: return "P3";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  if (name == "P") return Family::P;
  if (name == "P2") return Family::P2;
  if (name == "P3") return Family::P3;
  throw argument_error("unknown polynomial family '" + name + "'");
}

inline int min_genus(Family f) { return f == Family::P ? 1 : 0; }

/// Guaranteed degree bound: 3g - 1, 3g + 1, 3g + 3.
inline int degree_bound(Family f, int g) {
  switch (f) {
    case Family::P: return 3 * g - 1;
    case Family::P2: return 3 * g + 1;
    case Family::P3: return 3 * g + 3;
  }
  return 0;
}

/// Guaranteed power of z dividing the polynomial: 2g, 2g + 1, 2g + 2.
inline int valuation_bound(Family f, int g) {
  switch (f) {
    case Family::P: return 2 * g;
    case Family::P2: return 2 * g + 1;
    case Family::P3: return 2 * g + 2;
  }
  return 0;
}

/// Twice the exponent of (1 - 4z) in the denominator.
inline std::int64_t twice_pole_order(Family f, int g) {
  switch (f) {
    case Family::P: return 6 * g - 1;
    case Family::P2: return 6 * g + 4;
    case Family::P3: return 6 * g + 9;
  }
  return 0;
}

/// Throws internal_error if `p` breaks the degree or divisibility bound.
inline void check_family(Family f, int g, const IntPolynomial& p) {
  const std::string tag = family_name(f) + "_" + std::to_string(g);
  if (p.is_zero()) {
    throw internal_error(tag + " is zero");
  }
  if (p.degree() > degree_bound(f, g)) {
    throw internal_error(tag + " has degree " + std::to_string(p.degree()) +
                         " above " + std::to_string(degree_bound(f, g)));
  }
  if (p.valuation() < valuation_bound(f, g)) {
    throw internal_error(tag + " is not divisible by z^" +
                         std::to_string(valuation_bound(f, g)));
  }
}

/// P_g from the Harer-Zagier numbers. Coefficients at degrees 3g .. 3g-1+guard
/// of eps-series * (1 - 4z)^(3g - 1/2) must vanish.
inline IntPolynomial fit_P(int g, int guard = 10) {
  if (g < 1 || guard < 1) {
    throw argument_error("fit_P: need g >= 1 and guard >= 1");
  }
  const auto order = static_cast<std::size_t>(3 * g - 1 + guard);
  std::vector<ExactInt> eps(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    eps[n] = hz_epsilon(g, static_cast<int>(n));
  }
  // (1 - 4z)^(3g - 1/2) = (1 - 4z)^(3g) * (1 - 4z)^(-1/2)
  const auto factor = truncated_product(
      one_minus_4z_pow(static_cast<std::size_t>(3 * g)),
      halfint_coeffs(1, order), order);
  const auto product =
      truncated_product(IntPolynomial(eps), factor, order);
  for (std::size_t i = static_cast<std::size_t>(3 * g); i <= order; ++i) {
    if (product[i] != 0) {
      throw internal_error("fit_P: coefficient of z^" + std::to_string(i) +
                           " in P_" + std::to_string(g) + " does not vanish");
    }
  }
  IntPolynomial p(std::vector<ExactInt>(product.begin(),
                                        product.begin() + 3 * g));
  check_family(Family::P, g, p);
  return p;
}

/// Memoized source of P, P2 and P3, optionally persisted as JSON files
/// `<cache_dir>/<family>_<g>.json` holding
/// {"family": "P"|"P2"|"P3", "g": int, "coeffs": [decimal strings]}.
class PolynomialStore {
 public:
  explicit PolynomialStore(std::optional<std::filesystem::path> cache_dir = {},
                           int guard = 10)
      : cache_dir_(std::move(cache_dir)), guard_(guard) {}

  IntPolynomial get(Family f, int g) {
    if (g < min_genus(f)) {
      throw argument_error(family_name(f) + "_" + std::to_string(g) +
                           " is not defined");
    }
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(f, g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IntPolynomial p;
    if (auto loaded = load(f, g)) {
      p = std::move(*loaded);
    } else {
      p = compute(f, g);
      save(f, g, p);
    }
    memo_.emplace(key, p);
    return p;
  }

  IntPolynomial P(int g) { return get(Family::P, g); }
  IntPolynomial P2(int g) { return get(Family::P2, g); }
  IntPolynomial P3(int g) { return get(Family::P3, g); }

  const std::optional<std::filesystem::path>& cache_dir() const {
    return cache_dir_;
  }

  static nlohmann::json to_json(Family f, int g, const IntPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
    return {{"family", family_name(f)}, {"g", g}, {"coeffs", coeffs}};
  }

  /// Parses a cache record and validates it against the family bounds.
  static IntPolynomial from_json(const nlohmann::json& j, Family f, int g) {
    if (j.at("family").get<std::string>() != family_name(f) ||
        j.at("g").get<int>() != g) {
      throw argument_error("polynomial cache record does not match " +
                           family_name(f) + "_" + std::to_string(g));
    }
    std::vector<ExactInt> coeffs;
    for (const auto& c : j.at("coeffs")) {
      coeffs.push_back(from_decimal(c.get<std::string>()));
    }
    IntPolynomial p(std::move(coeffs));
    check_family(f, g, p);
    return p;
  }

 private:
  IntPolynomial compute(Family f, int g);

  std::optional<std::filesystem::path> file_for(Family f, int g) const {
    if (!cache_dir_) return std::nullopt;
    return *cache_dir_ / (family_name(f) + "_" + std::to_string(g) + ".json");
  }

  std::optional<IntPolynomial> load(Family f, int g) const {
    auto path = file_for(f, g);
    if (!path || !std::filesystem::exists(*path)) return std::nullopt;
    std::ifstream in(*path);
    return from_json(nlohmann::json::parse(in), f, g);
  }

  void save(Family f, int g, const IntPolynomial& p) const {
    auto path = file_for(f, g);
    if (!path) return;
    std::filesystem::create_directories(path->parent_path());
    auto tmp = *path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << to_json(f, g, p).dump() << '\n';
    }
    std::filesystem::rename(tmp, *path);
  }

  std::optional<std::filesystem::path> cache_dir_;
  int guard_;
  std::recursive_mutex mutex_;
  std::map<std::pair<Family, int>, IntPolynomial> memo_;
};

/// P2_g = z^-1 P_{g+1} - sum_{h=1}^{g} P_h P_{g+1-h}.
inline IntPolynomial p2_from_p(int g, PolynomialStore& store) {
  if (g < 0) throw argument_error("p2_from_p: g must be nonnegative");
  IntPolynomial p = store.P(g + 1).shift_down();
  for (int h = 1; h <= g; ++h) {
    p -= store.P(h) * store.P(g + 1 - h);
  }
  check_family(Family::P2, g, p);
  return p;
}

/// P3_g = z^-1 P2_{g+1} - 2 sum_{h=1}^{g} P_h P2_{g+1-h}
///        - 2z^2 (1-4z)^2 P''_{g+1} - ((48g+20)z + 5) z (1-4z) P'_{g+1}
///        - (48(2g+1)(3g+2) z^2 + (60g+44) z + 1) P_{g+1}.
inline IntPolynomial p3_from(int g, PolynomialStore& store) {
  if (g < 0) throw argument_error("p3_from: g must be nonnegative");
  const IntPolynomial next = store.P(g + 1);
  const IntPolynomial d1 = poly_derivative(next);
  const IntPolynomial d2 = poly_derivative(d1);
  const IntPolynomial one_minus_4z{1, -4};
  const std::int64_t gg = g;

  IntPolynomial p = store.P2(g + 1).shift_down();
  IntPolynomial conv;
  for (int h = 1; h <= g; ++h) conv += store.P(h) * store.P2(g + 1 - h);
  p -= ExactInt(2) * conv;
  p -= IntPolynomial::monomial(2, 2) * one_minus_4z_pow(2) * d2;
  p -= IntPolynomial{5, 48 * gg + 20}.shift_up() * one_minus_4z * d1;
  p -= IntPolynomial{1, 60 * gg + 44, 48 * (2 * gg + 1) * (3 * gg + 2)} * next;
  check_family(Family::P3, g, p);
  return p;
}

inline IntPolynomial PolynomialStore::compute(Family f, int g) {
  switch (f) {
    case Family::P: return fit_P(g, guard_);
    case Family::P2: return p2_from_p(g, *this);
    case Family::P3: return p3_from(g, *this);
  }
  throw internal_error("PolynomialStore: unknown family");
}

/// Process-wide store without persistence.
inline PolynomialStore& shared_store() {
  static PolynomialStore store;
  return store;
}

}  // namespace gluing
