#pragma once

// Verification suites: each cross-checks independent routes and records
// every disagreement as a counterexample string.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gluing/exact_int.hpp"
#include "gluing/families.hpp"
#include "gluing/generating.hpp"
#include "gluing/multiplicity.hpp"
#include "gluing/oracle.hpp"
#include "gluing/recurrences.hpp"
#include "gluing/reference_tables.hpp"

namespace gluing {

struct SuiteReport {
  std::string suite;
  bool pass = true;
  std::vector<std::string> counterexamples;
  nlohmann::json details = nlohmann::json::object();

  void fail(std::string what) {
    pass = false;
    counterexamples.push_back(std::move(what));
  }

  nlohmann::json to_json(std::size_t max_counterexamples = 10) const {
    nlohmann::json j;
    j["suite"] = suite;
    j["pass"] = pass;
    j["failures"] = counterexamples.size();
    nlohmann::json ce = nlohmann::json::array();
    for (std::size_t i = 0; i < counterexamples.size() && i < max_counterexamples; ++i) {
      ce.push_back(counterexamples[i]);
    }
    j["counterexamples"] = ce;
    j["details"] = details;
    return j;
  }
};

/// Memoized oracle totals keyed by (n, k).
class OracleCache {
 public:
  explicit OracleCache(OracleOptions opts = {}) : opts_(std::move(opts)) {}

  const GenusTable& total(std::uint32_t n, std::uint32_t k) {
    auto key = std::make_pair(n, k);
    auto it = totals_.find(key);
    if (it == totals_.end()) {
      it = totals_.emplace(key, count_total(n, k, opts_)).first;
    }
    return it->second;
  }

  ExactInt eps(int g, std::uint32_t n, std::uint32_t k) {
    if (g < 0) return 0;
    return total(n, k)[g];
  }

  const OracleOptions& options() const { return opts_; }

 private:
  OracleOptions opts_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, GenusTable> totals_;
};

namespace detail {

inline std::string key(int g, int n, int k) {
  return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
         ",g=" + std::to_string(g) + ")";
}

}  // namespace detail

/// Computed P (g = 1..5), P2 (g = 0..5), P3 (g = 0..4) against the tables.
inline SuiteReport verify_polys(PolynomialStore& store) {
  SuiteReport r{"polys"};
  int matched = 0;
  for (const auto& t : reference::tables()) {
    const std::string name = family_name(t.family) + "_" + std::to_string(t.g);
    try {
      const IntPolynomial computed = store.get(t.family, t.g);
      if (computed == t.expand()) {
        ++matched;
      } else {
        r.fail(name + ": computed " + computed.to_string() + ", tabulated " +
               t.expand().to_string());
      }
    } catch (const std::exception& e) {
      r.fail(name + ": " + e.what());
    }
  }
  r.details["tabulated"] = reference::tables().size();
  r.details["matched"] = matched;
  return r;
}

/// Closed forms for eps_0(n,3) and eps_1(n,3) against series coefficients,
/// plus vanishing below the Euler bound n < k + 2g - 1.
inline SuiteReport verify_closed(int max_n, PolynomialStore& store) {
  SuiteReport r{"closed"};
  for (int g = 0; g <= 1; ++g) {
    for (int n = 0; n <= max_n; ++n) {
      const ExactInt closed = eps_closed(g, n, 3);
      const ExactInt series = eps_from_series(g, n, 3, store);
      if (closed != series) {
        r.fail(detail::key(g, n, 3) + ": closed " + closed.str() + " != series " +
               series.str());
      }
      if (n < 3 + 2 * g - 1 && closed != 0) {
        r.fail(detail::key(g, n, 3) + ": closed form does not vanish");
      }
    }
  }
  r.details["max_n"] = max_n;
  return r;
}

/// All routes for every (n, k, g) with 1 <= n <= max_n, k <= 3,
/// 0 <= g <= n/2, one-polygon totality, and the fixed anchor values.
inline SuiteReport verify_cross(int max_n, OracleCache& oracle,
                                PolynomialStore& store) {
  SuiteReport r{"cross"};
  nlohmann::json matrix = nlohmann::json::array();
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int g = 0; 2 * g <= n; ++g) {
        std::map<std::string, ExactInt> values;
        values["oracle"] = oracle.eps(g, n, k);
        values["recurrence"] = eps_recurrence(g, n, k);
        values["series"] = eps_from_series(g, n, k, store);
        if (has_closed_form(g, k)) values["closed"] = eps_closed(g, n, k);
        bool agree = true;
        nlohmann::json vj = nlohmann::json::object();
        for (const auto& [route, v] : values) {
          vj[route] = v.str();
          agree = agree && v == values["oracle"];
        }
        if (!agree) r.fail(detail::key(g, n, k) + ": " + vj.dump());
        if (n < k + 2 * g - 1 && values["oracle"] != 0) {
          r.fail(detail::key(g, n, k) + ": nonzero below the Euler bound");
        }
        matrix.push_back({{"n", n}, {"k", k}, {"g", g}, {"values", vj},
                          {"agree", agree}});
      }
    }
    // Every pairing of one polygon is connected.
    const ExactInt all = double_factorial(2 * n - 1);
    ExactInt by_recurrence = 0;
    for (int g = 0; 2 * g <= n; ++g) by_recurrence += hz_epsilon(g, n);
    if (oracle.total(n, 1).total() != all || by_recurrence != all) {
      r.fail("totality n=" + std::to_string(n) + ": oracle " +
             oracle.total(n, 1).total().str() + ", recurrence " +
             by_recurrence.str() + ", expected " + all.str());
    }
  }
  struct Anchor { int g, n, k; long value; };
  const Anchor anchors[] = {{0, 2, 1, 2},   {1, 2, 1, 1},   {2, 4, 1, 21},
                            {0, 2, 3, 6},   {0, 3, 3, 116}, {1, 4, 3, 540},
                            {1, 5, 3, 18684}};
  nlohmann::json anchor_json = nlohmann::json::array();
  for (const auto& a : anchors) {
    if (a.n > max_n) continue;
    const ExactInt got = oracle.eps(a.g, a.n, a.k);
    anchor_json.push_back({{"n", a.n}, {"k", a.k}, {"g", a.g}, {"value", got.str()}});
    if (got != a.value) {
      r.fail("anchor " + detail::key(a.g, a.n, a.k) + ": " + got.str() +
             " != " + std::to_string(a.value));
    }
  }
  r.details["max_n"] = max_n;
  r.details["matrix"] = matrix;
  r.details["anchors"] = anchor_json;
  return r;
}

/// eps_g(n+1, k) = sum_{m in comp(2n, k-1)} (m_1+1)(m_1+2)(k-1)/2 eps_g(m; k-1)
///               + sum_l sum_h sum_i C(k-1, l-1) eps_h(i, l) eps_{g-h}(n-i, k-l+1)
///               + eps_{g-1}(n, k+1),
/// every term from the oracle, for g <= max_g, 1 <= n <= max_n, k <= max_k.
inline ExactInt face_recurrence_rhs(int g, std::uint32_t n, std::uint32_t k,
                             OracleCache& oracle) {
  ExactInt rhs = 0;
  if (k >= 2) {
    for (const auto& [key, count] : count_by_face1_degree(n, k - 1, oracle.options())) {
      const auto& [m, genus] = key;
      if (genus != g) continue;
      rhs += ExactInt((m + 1) * (m + 2) * (k - 1) / 2) * count;
    }
  }
  for (std::uint32_t l = 1; l <= k; ++l) {
    for (int h = 0; h <= g; ++h) {
      for (std::uint32_t i = 0; i <= n; ++i) {
        rhs += binomial(k - 1, l - 1) * oracle.eps(h, i, l) *
               oracle.eps(g - h, n - i, k - l + 1);
      }
    }
  }
  rhs += oracle.eps(g - 1, n, k + 1);
  return rhs;
}

inline SuiteReport verify_face_recurrence(int max_g, int max_n, int max_k,
                                   OracleCache& oracle) {
  SuiteReport r{"theorem1"};
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 1; k <= max_k; ++k) {
    for (int n = 1; n <= max_n; ++n) {
      for (int g = 0; g <= max_g; ++g) {
        const ExactInt lhs = oracle.eps(g, n + 1, k);
        const ExactInt rhs = face_recurrence_rhs(g, n, k, oracle);
        rows.push_back({{"n", n}, {"k", k}, {"g", g}, {"lhs", lhs.str()},
                        {"rhs", rhs.str()}});
        if (lhs != rhs) {
          r.fail("eps_" + std::to_string(g) + "(" + std::to_string(n + 1) + "," +
                 std::to_string(k) + ") = " + lhs.str() + " but recurrence gives " +
                 rhs.str());
        }
      }
    }
  }
  r.details["rows"] = rows;
  return r;
}

/// Surgery multiplicities for every (g, n+1, k) with n+1 <= max_edges,
/// k <= max_k and g up to the largest genus with maps of that type.
inline SuiteReport verify_multiplicity_suite(int max_edges, int max_k,
                                       unsigned threads = 0) {
  SuiteReport r{"lemma2"};
  nlohmann::json runs = nlohmann::json::array();
  for (int edges = 1; edges <= max_edges; ++edges) {
    for (int k = 1; k <= max_k; ++k) {
      for (int g = 0; edges >= k + 2 * g - 1; ++g) {
        const auto report = verify_multiplicities(g, edges, k, threads);
        std::uint64_t buckets = report.buckets.size();
        runs.push_back({{"g", g}, {"n_plus_1", edges}, {"k", k},
                        {"inputs", report.inputs.str()},
                        {"buckets", buckets}, {"pass", report.pass}});
        for (const auto* b : report.mismatches()) {
          r.fail(detail::key(g, edges, k) + " " + b->output_key + ": observed " +
                 b->observed.str() + ", expected " + b->expected.str());
        }
      }
    }
  }
  r.details["runs"] = runs;
  return r;
}

/// Degree and divisibility bounds, P(1/4) != 0, P2(1/4) > 0 for all
/// families up to max_g, and the two F_g routes for g = 1..3.
inline SuiteReport verify_invariants(int max_g, std::size_t f_order,
                                     PolynomialStore& store) {
  SuiteReport r{"invariants"};
  nlohmann::json polys = nlohmann::json::array();
  for (Family f : {Family::P, Family::P2, Family::P3}) {
    for (int g = min_genus(f); g <= max_g; ++g) {
      const std::string name = family_name(f) + "_" + std::to_string(g);
      try {
        const IntPolynomial p = store.get(f, g);
        check_family(f, g, p);
        const ExactInt quarter = p.scaled_value_at_quarter();
        const int sign = quarter > 0 ? 1 : (quarter < 0 ? -1 : 0);
        if (f == Family::P && sign == 0) r.fail(name + "(1/4) = 0");
        if (f == Family::P2 && sign <= 0) r.fail(name + "(1/4) is not positive");
        polys.push_back({{"name", name}, {"degree", p.degree()},
                         {"valuation", p.valuation()}, {"sign_at_quarter", sign}});
      } catch (const std::exception& e) {
        r.fail(name + ": " + e.what());
      }
    }
  }
  for (int g = 1; g <= 3; ++g) {
    try {
      f_series(g, f_order, store);
    } catch (const std::exception& e) {
      r.fail(std::string("F_") + std::to_string(g) + ": " + e.what());
    }
  }
  r.details["polynomials"] = polys;
  r.details["f_series_order"] = f_order;
  return r;
}

}  // namespace gluing
