#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "lierank/errors.hpp"
#include "lierank/reps.hpp"
#include "lierank/subgroups.hpp"

using namespace lierank;

namespace {

HalfIntVector e(int n, int i, int sign = 1) { return HalfIntVector::unit(n, i) * sign; }

// Λ² of the standard C_n module written out by hand: every ±e_i±e_j with
// i < j once, and the zero weight n times.
std::map<HalfIntVector, int> lambda2_by_hand(int n) {
  std::map<HalfIntVector, int> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int a : {1, -1}) {
        for (int b : {1, -1}) ++out[e(n, i, a) + e(n, j, b)];
      }
    }
  }
  out[HalfIntVector(n)] += n;
  return out;
}

EmbeddedSubgroup find_subgroup(SimpleTypeId g, const std::string& name) {
  for (const auto& h : enumerate_full_rank_subgroups(g, -1)) {
    if (h.descriptor.str() == name) return h;
  }
  throw Error("no subgroup " + name + " in " + g.name());
}

}  // namespace

TEST(WeightMultiset, Basics) {
  WeightMultiset w;
  w.ambient_dim = 2;
  w.add(HalfIntVector(2), 3);
  w.add(e(2, 0));
  EXPECT_EQ(w.dimension(), 4);
  EXPECT_EQ(w.multiplicity(HalfIntVector(2)), 3);
  EXPECT_FALSE(w.negation_symmetric());
  w.add(e(2, 0, -1));
  EXPECT_TRUE(w.negation_symmetric());
  EXPECT_EQ((w + w).dimension(), 10);
}

TEST(WeightMultiset, ZeroWeightsKept) {
  auto l2 = exterior_square(standard_symplectic_weights(3));
  EXPECT_EQ(l2.multiplicity(HalfIntVector(3)), 3);
}

TEST(Operations, Dimensions) {
  for (int n = 1; n <= 6; ++n) {
    auto v = standard_symplectic_weights(n);
    int d = 2 * n;
    EXPECT_EQ(v.dimension(), d);
    EXPECT_EQ(exterior_square(v).dimension(), d * (d - 1) / 2);
    EXPECT_EQ(symmetric_square(v).dimension(), d * (d + 1) / 2);
    EXPECT_EQ(tensor(v, v).dimension(), d * d);
    EXPECT_EQ(exterior_square(v) + symmetric_square(v), tensor(v, v));
  }
}

TEST(Operations, ExteriorSquareByHand) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(exterior_square(standard_symplectic_weights(n)).entries, lambda2_by_hand(n));
  }
}

TEST(Operations, SymmetricSquareIsAdjoint) {
  // S²(C^{2n}) is the adjoint module of C_n: its roots plus n zero weights.
  for (int n = 1; n <= 5; ++n) {
    auto s2 = symmetric_square(standard_symplectic_weights(n));
    const auto& c = realize(SimpleTypeId::make(n == 1 ? Series::A : Series::C, n));
    EXPECT_EQ(s2.multiplicity(HalfIntVector(n)), n);
    if (n > 1) {
      for (const auto& r : c.roots) EXPECT_EQ(s2.multiplicity(r), 1) << r.str();
      EXPECT_EQ(s2.dimension(), static_cast<int>(c.roots.size()) + n);
    }
  }
}

TEST(Restrict, Projection) {
  auto v = standard_symplectic_weights(3);
  auto r = restrict(v, LinearMap::coordinates(3, {0}));
  EXPECT_EQ(r.ambient_dim, 1u);
  EXPECT_EQ(r.multiplicity(HalfIntVector(1)), 4);
  EXPECT_EQ(r.multiplicity(e(1, 0)), 1);
  EXPECT_EQ(restrict(v, LinearMap::identity(3)), v);
  LinearMap bad;
  bad.rows = {{1, 0}};
  EXPECT_THROW(restrict(v, bad), Error);
}

TEST(Isotropy, WeightCount) {
  for (SimpleTypeId t : {SimpleTypeId{Series::F, 4}, SimpleTypeId{Series::G, 2},
                         SimpleTypeId{Series::C, 3}}) {
    const auto& g = realize(t);
    for (const auto& h : enumerate_full_rank_subgroups(t, -1)) {
      auto iso = isotropy_weights(g, h);
      EXPECT_EQ(static_cast<std::size_t>(iso.weights.dimension()),
                g.roots.size() - h.subsystem.size());
      EXPECT_TRUE(iso.weights.negation_symmetric());
    }
  }
}

TEST(Lambda2Iso, AllSmallRanks) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(verify_lemma_iso(n)) << n;
}

TEST(CnSplit, SumsToLambdaSquare) {
  for (int n = 1; n <= 8; ++n) {
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      auto s = prop_cn_split(n, p, q);
      EXPECT_EQ(s.lambda2_q.dimension(), q * (2 * q - 1));
      EXPECT_EQ(s.cross_qp.dimension(), 4 * p * q);
      EXPECT_EQ(s.trivial_p.dimension(), p);
      EXPECT_EQ(s.tau_p.dimension(), 2 * p * (p - 1));
      EXPECT_EQ(s.total().entries, lambda2_by_hand(n)) << n << " " << p;
    }
  }
  EXPECT_THROW(prop_cn_split(4, -1, 5), Error);
  EXPECT_THROW(prop_cn_split(0, 0, 0), Error);
  EXPECT_THROW(prop_cn_split(4, 1, 2), Error);
}

TEST(Blocks, PartitionIsotropyWeights) {
  for (SimpleTypeId t : {SimpleTypeId{Series::F, 4}, SimpleTypeId{Series::E, 6}}) {
    const auto& g = realize(t);
    for (const auto& h : enumerate_full_rank_subgroups(t, 2)) {
      auto blocks = isotropy_blocks(g, h);
      RootSet all;
      for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
      std::size_t total = all.size();
      all = make_root_set(all);
      EXPECT_EQ(total, all.size());
      EXPECT_EQ(all, set_difference(g.roots, h.subsystem));
      // Adding a root of H never leaves a block.
      for (const auto& b : blocks) {
        for (const auto& w : b) {
          for (const auto& a : h.subsystem) {
            auto s = w + a;
            if (contains(all, s)) EXPECT_TRUE(contains(b, s)) << h.descriptor.str();
          }
        }
      }
    }
  }
}

TEST(InvariantAcs, KnownSpaces) {
  auto acs = [](SimpleTypeId t, const std::string& h) {
    return invariant_acs_exists(realize(t), find_subgroup(t, h));
  };
  EXPECT_TRUE(acs({Series::G, 2}, "A2"));
  EXPECT_TRUE(acs({Series::E, 6}, "A2^3"));
  EXPECT_TRUE(acs({Series::C, 4}, "U(4)"));
  EXPECT_TRUE(acs({Series::E, 8}, "T8"));
  EXPECT_TRUE(acs({Series::E, 7}, "E6xT1"));
  EXPECT_FALSE(acs({Series::B, 3}, "D3"));
  EXPECT_FALSE(acs({Series::F, 4}, "D4"));
  EXPECT_FALSE(acs({Series::E, 8}, "D8"));
  EXPECT_FALSE(acs({Series::C, 3}, "C1^3"));
}
