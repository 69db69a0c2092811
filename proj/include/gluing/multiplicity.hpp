#pragma once

// Exhaustive check of how often each output of delete_marked_edge occurs.
//
// Deleting the marked edge from every connected marked map of genus g with
// n + 1 edges and k faces must produce
//   - each (g, n, k - 1) map whose face 1 has m arcs exactly
//     (m + 1)(m + 2)(k - 1) / 2 times,
//   - each (g - 1, n, k + 1) map exactly once,
//   - each ordered pair of maps with n edges, k + 1 faces and genera summing
//     to g (the trivial map allowed on either side) exactly
//     C(k - 1, k1 - 1) times, k1 being the face count of the first map.
// Expected outputs are enumerated independently, so a missing output shows
// up as observed 0.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "gluing/exact_int.hpp"
#include "gluing/marked_map.hpp"
#include "gluing/oracle.hpp"
#include "gluing/surgery.hpp"

namespace gluing {

struct MultiplicityBucket {
  std::string output_key;
  ExactInt observed;
  ExactInt expected;
};

struct MultiplicityReport {
  int g = 0;
  std::uint32_t n_plus_1 = 0;
  std::uint32_t k = 0;
  ExactInt inputs = 0;
  std::vector<MultiplicityBucket> buckets;
  bool pass = true;

  std::vector<const MultiplicityBucket*> mismatches() const {
    std::vector<const MultiplicityBucket*> out;
    for (const auto& b : buckets) {
      if (b.observed != b.expected) out.push_back(&b);
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["params"] = {{"g", g}, {"n_plus_1", n_plus_1}, {"k", k},
                   {"inputs", inputs.str()}};
    j["buckets"] = nlohmann::json::array();
    for (const auto& b : buckets) {
      j["buckets"].push_back({{"output_key", b.output_key},
                              {"observed", b.observed.str()},
                              {"expected", b.expected.str()}});
    }
    j["pass"] = pass;
    return j;
  }
};

/// Runs the deletion over every (g, n_plus_1, k) input map and compares the
/// observed multiplicity of each output against the expected one.
inline MultiplicityReport verify_multiplicities(int g, std::uint32_t n_plus_1,
                                        std::uint32_t k,
                                        unsigned threads = 0) {
  if (g < 0 || n_plus_1 < 1 || k < 1) {
    throw argument_error("verify_multiplicities: need g >= 0, n+1 >= 1, k >= 1");
  }
  MultiplicityReport report;
  report.g = g;
  report.n_plus_1 = n_plus_1;
  report.k = k;
  const std::uint32_t n = n_plus_1 - 1;

  std::map<std::tuple<int, std::uint32_t, std::uint32_t>, std::vector<MarkedMap>>
      cache;
  auto maps = [&](int genus, std::uint32_t edges,
                  std::uint32_t faces) -> const std::vector<MarkedMap>& {
    auto key = std::make_tuple(genus, edges, faces);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, enumerate_maps(genus, edges, faces)).first;
    }
    return it->second;
  };

  std::map<std::string, ExactInt> expected;
  if (k >= 2) {
    for (const auto& m : maps(g, n, k - 1)) {
      const std::uint32_t face1 = m.faces()[0];
      expected[result_key(FaceMerge{m})] =
          ExactInt((face1 + 1) * (face1 + 2) * (k - 1) / 2);
    }
  }
  if (g >= 1) {
    for (const auto& m : maps(g - 1, n, k + 1)) {
      expected[result_key(GenusDrop{m})] = 1;
    }
  }
  for (std::uint32_t n1 = 0; n1 <= n; ++n1) {
    for (std::uint32_t k1 = 1; k1 <= k; ++k1) {
      for (int g1 = 0; g1 <= g; ++g1) {
        const auto& left = maps(g1, n1, k1);
        const auto& right = maps(g - g1, n - n1, k + 1 - k1);
        const ExactInt mult = binomial(k - 1, k1 - 1);
        for (const auto& a : left) {
          for (const auto& b : right) {
            expected[result_key(Split{a, b})] = mult;
          }
        }
      }
    }
  }

  const auto& inputs = maps(g, n_plus_1, k);
  report.inputs = inputs.size();

  unsigned workers = threads ? threads
                             : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(workers, inputs.size())));
  std::vector<std::map<std::string, std::uint64_t>> partial(workers);
  auto run = [&](unsigned id) {
    for (std::size_t i = id; i < inputs.size(); i += workers) {
      ++partial[id][result_key(delete_marked_edge(inputs[i]))];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  std::map<std::string, ExactInt> observed;
  for (const auto& p : partial) {
    for (const auto& [key, count] : p) observed[key] += count;
  }

  std::map<std::string, MultiplicityBucket> merged;
  for (const auto& [key, v] : expected) merged[key] = {key, 0, v};
  for (const auto& [key, v] : observed) {
    auto& b = merged[key];
    b.output_key = key;
    b.observed = v;
  }
  for (auto& [key, b] : merged) {
    report.pass = report.pass && b.observed == b.expected;
    report.buckets.push_back(std::move(b));
  }
  return report;
}

}  // namespace gluing
