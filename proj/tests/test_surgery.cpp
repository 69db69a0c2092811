#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "gluing/multiplicity.hpp"
#include "gluing/oracle.hpp"
#include "gluing/surgery.hpp"

using namespace gluing;

namespace {

MarkedMap map_of(std::vector<std::uint32_t> faces, std::vector<Cycle> pairs) {
  Composition c(std::move(faces));
  return MarkedMap(c, Permutation::from_cycles(c.total(), pairs));
}

std::string key_of(const MarkedMap& m) { return result_key(delete_marked_edge(m)); }

}  // namespace

TEST(TauPrime, TorusSkipsDeletedArcs) {
  const auto tp = tau_prime(Permutation::from_cycles(4, {{1, 3}, {2, 4}}),
                            Permutation::from_cycles(4, {{1, 2, 3, 4}}), 1);
  EXPECT_EQ(tp.domain(), (std::vector<Arc>{2, 4}));
  EXPECT_EQ(tp(2), 2u);
  EXPECT_EQ(tp(4), 4u);
}

TEST(TauPrime, SingleEdgeLeavesNothing) {
  const auto tp = tau_prime(Permutation::from_cycles(2, {{1, 2}}),
                            Permutation::identity(2), 1);
  EXPECT_TRUE(tp.domain().empty());
}

TEST(TauPrime, Lollipop) {
  const auto tp = tau_prime(Permutation::from_cycles(4, {{1, 3}, {2, 4}}),
                            Permutation::from_cycles(4, {{1, 2, 3}}), 1);
  EXPECT_EQ(tp.cycles(), (std::vector<Cycle>{{2}, {4}}));
}

TEST(TauPrime, RejectsFixedArc) {
  EXPECT_THROW(tau_prime(Permutation::identity(2), Permutation::identity(2), 1),
               contract_violation);
}

TEST(Deletion, TorusDropsGenus) {
  const auto torus = map_of({4}, {{1, 3}, {2, 4}});
  EXPECT_EQ(classify_deletion(torus), DeletionCase::kSameFaceConnected);
  const auto r = delete_marked_edge(torus);
  ASSERT_TRUE(std::holds_alternative<GenusDrop>(r));
  const auto& out = std::get<GenusDrop>(r).map;
  EXPECT_EQ(out.serialize(), "n=1; faces=[1,1]; iota=[(1,2)]");
  EXPECT_EQ(genus_of(out), 0);
}

TEST(Deletion, LollipopPutsTrivialMapSecond) {
  const auto lollipop = map_of({3, 1}, {{1, 3}, {2, 4}});
  EXPECT_EQ(classify_deletion(lollipop), DeletionCase::kConsecutive);
  EXPECT_EQ(key_of(lollipop),
            "split: n=1; faces=[1,1]; iota=[(1,2)] | n=0; faces=[0]; iota=[]");
}

TEST(Deletion, PendantEdgeIntoVertexPutsTrivialMapFirst) {
  // tau(e1) = f1: the head of e1 is the degree-1 vertex.
  const auto m = map_of({3, 1}, {{1, 2}, {3, 4}});
  EXPECT_EQ(key_of(m),
            "split: n=0; faces=[0]; iota=[] | n=1; faces=[1,1]; iota=[(1,2)]");
}

TEST(Deletion, OnlyEdgeOfTwoFaceSphere) {
  const auto r = delete_marked_edge(map_of({1, 1}, {{1, 2}}));
  ASSERT_TRUE(std::holds_alternative<FaceMerge>(r));
  EXPECT_TRUE(std::get<FaceMerge>(r).map.is_trivial());
}

TEST(Deletion, OnlyEdgeOfOneFaceSphere) {
  EXPECT_EQ(key_of(map_of({2}, {{1, 2}})),
            "split: n=0; faces=[0]; iota=[] | n=0; faces=[0]; iota=[]");
}

TEST(Deletion, MergeMarksOldMarkOfFaceJ) {
  // f1 = 3 is not face 2's marked arc 2, so the merged face keeps mark 2.
  const auto m = map_of({1, 5}, {{1, 3}, {2, 4}, {5, 6}});
  EXPECT_EQ(classify_deletion(m), DeletionCase::kDistinctFaces);
  EXPECT_EQ(key_of(m), "merge: n=2; faces=[4]; iota=[(1,2),(3,4)]");
}

TEST(Deletion, MergeMarksSuccessorOfE1) {
  // f1 = 3 is face 2's mark and tau(e1) = 2 != e1.
  const auto m = map_of({2, 4}, {{1, 3}, {2, 4}, {5, 6}});
  EXPECT_EQ(key_of(m), "merge: n=2; faces=[4]; iota=[(1,2),(3,4)]");
}

TEST(Deletion, MergeMarksSuccessorOfF1WhenE1IsALoopFace) {
  // f1 = 2 is face 2's mark and tau(e1) = e1, so the mark moves to tau(f1) = 3.
  const auto m = map_of({1, 5}, {{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(key_of(m), "merge: n=2; faces=[4]; iota=[(1,2),(3,4)]");
}

TEST(Deletion, MergeRenumbersRemainingFaces) {
  const auto m = map_of({1, 1, 2}, {{1, 3}, {2, 4}});
  EXPECT_EQ(key_of(m), "merge: n=1; faces=[1,1]; iota=[(1,2)]");
  const auto three = map_of({1, 2, 1, 2}, {{1, 5}, {2, 4}, {3, 6}});
  const auto r = delete_marked_edge(three);
  ASSERT_TRUE(std::holds_alternative<FaceMerge>(r));
  EXPECT_EQ(std::get<FaceMerge>(r).map.faces().to_string(), "[1,2,1]");
}

TEST(Deletion, SameFaceSplit) {
  const auto m = map_of({6}, {{1, 4}, {2, 3}, {5, 6}});
  EXPECT_EQ(classify_deletion(m), DeletionCase::kSameFaceSplit);
  EXPECT_EQ(key_of(m),
            "split: n=1; faces=[2]; iota=[(1,2)] | n=1; faces=[2]; iota=[(1,2)]");
}

TEST(Deletion, SplitKeepsFaceOrderWithinComponents) {
  // The a-side carries old faces 2 (size 1) and 3 (size 2), in that order.
  const auto m = map_of({4, 1, 2, 1}, {{1, 3}, {2, 6}, {5, 7}, {4, 8}});
  const auto r = delete_marked_edge(m);
  ASSERT_TRUE(std::holds_alternative<Split>(r));
  const auto& s = std::get<Split>(r);
  EXPECT_EQ(s.first.faces().to_string(), "[1,1,2]");
  EXPECT_EQ(s.second.faces().to_string(), "[1,1]");
}

TEST(Deletion, RejectsTrivialInput) {
  EXPECT_THROW(delete_marked_edge(MarkedMap::trivial()), contract_violation);
}

TEST(Deletion, TypeConservation) {
  for (std::uint32_t edges = 1; edges <= 5; ++edges) {
    const std::uint32_t max_k = edges <= 4 ? 2 * edges : 4;
    for (std::uint32_t k = 1; k <= max_k; ++k) {
      for_each_marked_map(edges, k, [&](const MarkedMap& m, int g) {
        const auto r = delete_marked_edge(m);
        const std::size_t n = edges - 1;
        if (const auto* fm = std::get_if<FaceMerge>(&r)) {
          EXPECT_EQ(fm->map.edges(), n);
          EXPECT_EQ(fm->map.face_count(), k - 1 == 0 ? 1 : k - 1);
          EXPECT_EQ(genus_of(fm->map), g);
          EXPECT_GE(k, 2u);
        } else if (const auto* gd = std::get_if<GenusDrop>(&r)) {
          EXPECT_EQ(gd->map.edges(), n);
          EXPECT_EQ(gd->map.face_count(), k + 1);
          EXPECT_EQ(genus_of(gd->map), g - 1);
        } else {
          const auto& s = std::get<Split>(r);
          EXPECT_EQ(s.first.edges() + s.second.edges(), n);
          EXPECT_EQ(s.first.face_count() + s.second.face_count(), k + 1);
          EXPECT_EQ(genus_of(s.first) + genus_of(s.second), g);
        }
      });
    }
  }
}

TEST(Canonicalize, RelabelsSparseArcs) {
  RawMap raw{PartialPermutation({0, 0, 4, 0, 2}), PartialPermutation({0, 0, 2, 0, 4}),
             {2, 4}};
  EXPECT_EQ(canonicalize(raw).serialize(), "n=1; faces=[1,1]; iota=[(1,2)]");
}

TEST(Canonicalize, IsIdempotent) {
  const auto m = map_of({3, 1}, {{1, 3}, {2, 4}});
  RawMap raw{PartialPermutation::from(m.iota()), PartialPermutation::from(m.tau()),
             {1, 4}};
  EXPECT_EQ(canonicalize(raw), m);
}

TEST(Canonicalize, RejectsBadMarks) {
  const auto m = map_of({3, 1}, {{1, 3}, {2, 4}});
  const auto iota = PartialPermutation::from(m.iota());
  const auto tau = PartialPermutation::from(m.tau());
  EXPECT_THROW(canonicalize({iota, tau, {1}}), contract_violation);
  EXPECT_THROW(canonicalize({iota, tau, {1, 2}}), contract_violation);
  EXPECT_THROW(canonicalize({iota, tau, {}}), contract_violation);
}

TEST(Canonicalize, InvariantUnderRelabeling) {
  std::mt19937 rng(2024);
  for_each_marked_map(4, 3, [&](const MarkedMap& m, int) {
    const std::size_t size = m.iota().size();
    // Embed the arcs into a universe twice as large under a random injection.
    std::vector<Arc> pool(2 * size);
    std::iota(pool.begin(), pool.end(), Arc{1});
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Arc> iota(2 * size + 1, 0), tau(2 * size + 1, 0);
    for (Arc x = 1; x <= size; ++x) {
      iota[pool[x - 1]] = pool[m.iota()(x) - 1];
      tau[pool[x - 1]] = pool[m.tau()(x) - 1];
    }
    std::vector<Arc> marks;
    Arc start = 1;
    for (auto part : m.faces().parts()) {
      marks.push_back(pool[start - 1]);
      start += part;
    }
    EXPECT_EQ(canonicalize({PartialPermutation(iota), PartialPermutation(tau), marks}), m);
  });
}

TEST(Multiplicities, SmallCases) {
  const auto a = verify_multiplicities(0, 2, 1);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.inputs, 2);
  EXPECT_EQ(a.buckets.size(), 2u);

  const auto b = verify_multiplicities(1, 2, 1);
  EXPECT_TRUE(b.pass);
  ASSERT_EQ(b.buckets.size(), 1u);
  EXPECT_EQ(b.buckets[0].observed, 1);

  const auto c = verify_multiplicities(0, 3, 2);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.inputs, 48);
  ExactInt observed = 0;
  for (const auto& bucket : c.buckets) observed += bucket.observed;
  EXPECT_EQ(observed, 48);
}

TEST(Multiplicities, ReportJson) {
  const auto j = verify_multiplicities(0, 2, 2).to_json();
  EXPECT_TRUE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("params").at("k").get<int>(), 2);
  for (const auto& b : j.at("buckets")) {
    EXPECT_TRUE(b.at("observed").is_string());
    EXPECT_TRUE(b.at("expected").is_string());
  }
}
