#include <gtest/gtest.h>

#include "gluing/exact_int.hpp"
#include "gluing/oracle.hpp"

using namespace gluing;

namespace {

OracleOptions threads(unsigned t) {
  OracleOptions o;
  o.threads = t;
  return o;
}

}  // namespace

TEST(Oracle, RefinedCounts) {
  EXPECT_EQ(count_refined(Composition({2})), (GenusTable{{0, 1}}));
  EXPECT_EQ(count_refined(Composition({4})), (GenusTable{{0, 2}, {1, 1}}));
  EXPECT_EQ(count_refined(Composition({1, 1})), (GenusTable{{0, 1}}));
  EXPECT_EQ(count_refined(Composition({3, 1})), (GenusTable{{0, 3}}));
  EXPECT_EQ(count_refined(Composition({2, 2})), (GenusTable{{0, 2}}));
  EXPECT_EQ(count_refined(Composition({2, 1, 1})), (GenusTable{{0, 2}}));
}

TEST(Oracle, Totals) {
  EXPECT_EQ(count_total(0, 1), (GenusTable{{0, 1}}));
  EXPECT_EQ(count_total(0, 2), GenusTable{});
  EXPECT_EQ(count_total(2, 1), (GenusTable{{0, 2}, {1, 1}}));
  EXPECT_EQ(count_total(2, 3), (GenusTable{{0, 6}}));
  EXPECT_EQ(count_total(3, 3), (GenusTable{{0, 116}}));
  EXPECT_EQ(count_total(4, 3), (GenusTable{{0, 1332}, {1, 540}}));
  EXPECT_EQ(count_total(5, 2), (GenusTable{{0, 1280}, {1, 5440}, {2, 1485}}));
  EXPECT_EQ(count_total(4, 4), (GenusTable{{0, 2448}}));
  EXPECT_EQ(count_total(5, 4), (GenusTable{{0, 44544}, {1, 17160}}));
}

TEST(Oracle, FaceOneRefinement) {
  using Key = std::pair<std::uint32_t, int>;
  EXPECT_EQ(count_by_face1_degree(1, 2), (std::map<Key, ExactInt>{{{1, 0}, 1}}));
  EXPECT_EQ(count_by_face1_degree(2, 1),
            (std::map<Key, ExactInt>{{{4, 0}, 2}, {{4, 1}, 1}}));
  EXPECT_EQ(count_by_face1_degree(2, 2),
            (std::map<Key, ExactInt>{{{1, 0}, 3}, {{2, 0}, 2}, {{3, 0}, 3}}));
  EXPECT_EQ(count_by_face1_degree(3, 3),
            (std::map<Key, ExactInt>{{{1, 0}, 48}, {{2, 0}, 32}, {{3, 0}, 24}, {{4, 0}, 12}}));
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t k = 1; k <= 3; ++k) {
      GenusTable marginal;
      for (const auto& [key, v] : count_by_face1_degree(n, k)) marginal.add(key.second, v);
      EXPECT_EQ(marginal, count_total(n, k)) << n << "," << k;
    }
  }
}

TEST(Oracle, OnePolygonTotality) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(count_refined(Composition({2 * n})).total(), double_factorial(2 * n - 1));
  }
}

TEST(Oracle, VanishingBound) {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      const auto t = count_total(n, k);
      for (const auto& [g, v] : t.entries()) {
        EXPECT_GE(static_cast<int>(n), static_cast<int>(k) + 2 * g - 1);
      }
    }
  }
}

TEST(Oracle, ThreadCountDoesNotChangeResults) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const auto serial = count_all_refined(5, k, threads(1));
    EXPECT_EQ(count_all_refined(5, k, threads(3)), serial);
    EXPECT_EQ(count_all_refined(5, k, threads(8)), serial);
  }
}

TEST(Oracle, CyclicRotationSymmetry) {
  for (std::uint32_t two_n = 2; two_n <= 10; two_n += 2) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
      const auto table = count_all_refined(two_n / 2, k);
      for (const auto& [c, counts] : table) {
        std::vector<std::uint32_t> rotated(c.parts().begin() + 1, c.parts().end());
        rotated.push_back(c[0]);
        EXPECT_EQ(table.at(Composition(rotated)), counts) << c.to_string();
      }
    }
  }
}

TEST(Oracle, CapIsEnforced) {
  OracleOptions o;
  o.max_two_n = 8;
  EXPECT_THROW(count_total(5, 1, o), argument_error);
  o.force = true;
  EXPECT_NO_THROW(count_total(5, 1, o));
  OracleOptions huge;
  huge.force = true;
  EXPECT_THROW(count_total(17, 1, huge), argument_error);
}

TEST(Oracle, EnumeratedMapsMatchCounts) {
  EXPECT_EQ(enumerate_maps(0, 2, 1).size(), 2u);
  EXPECT_EQ(enumerate_maps(1, 2, 1).size(), 1u);
  EXPECT_EQ(enumerate_maps(0, 3, 2).size(), 48u);
  EXPECT_EQ(enumerate_maps(0, 0, 1).size(), 1u);
}

TEST(Oracle, ProgressCounterSeesEveryInvolution) {
  std::atomic<std::uint64_t> seen{0};
  OracleOptions o;
  o.progress = &seen;
  count_refined(Composition({4, 4}), o);
  EXPECT_EQ(seen.load(), 105u);
}
