#include <gtest/gtest.h>


#include "ordnet/adversaries.hpp"
#include "ordnet/generators.hpp"
#include "ordnet/oracle.hpp"
#include "support/families.hpp"
#include "support/oracles.hpp"

namespace ordnet {
namespace {

TEST(BruteForceOpt, SingleChainNeedsOneEdgePerPosition) {
  for (std::int32_t k = 2; k <= 8; ++k) {
    std::vector<VertexId> chain(static_cast<std::size_t>(k));
    std::iota(chain.begin(), chain.end(), 0);
    const Instance inst(k, {OrderedConstraint(chain)});
    const auto opt = brute_force_opt(inst);
    EXPECT_EQ(opt.edges.size(), static_cast<std::size_t>(k - 1));
    EXPECT_TRUE(all_satisfied(inst.constraints, opt.edges));
  }
}

TEST(BruteForceOpt, SharedFirstPair) {
  const Instance inst(3, {{0, 1, 2}, {1, 0, 2}});
  const auto opt = brute_force_opt(inst);
  EXPECT_EQ(opt.cost, 2.0);
  EXPECT_TRUE(opt.edges.contains(0, 1));
}

TEST(BruteForceOpt, GeneralLowerBoundInstance) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = general_lb_instance(4, seed);
    EXPECT_EQ(brute_force_opt(g.instance).cost, 3.0);
  }
}

TEST(BruteForceOpt, MatchesExhaustiveSearch) {
  SplitMix64 rng(31);
  int checked = 0;
  for (int run = 0; run < 300; ++run) {
    const auto n = static_cast<std::int32_t>(3 + rng.below(4));
    const auto r = 1 + rng.below(4);
    std::vector<OrderedConstraint> cs;
    for (std::uint64_t k = 0; k < r; ++k) {
      cs.push_back(testing_support::random_constraint(n, rng));
    }
    std::optional<CostMap> costs;
    if (rng.below(2) == 1) {
      costs.emplace();
      for (const Edge& e : testing_support::all_pairs(n)) {
        (*costs)[e] = 1.0 + static_cast<double>(rng.below(4));
      }
    }
    const Instance inst(n, cs, costs);
    double brute;
    try {
      brute = testing_support::exhaustive_opt(inst);
    } catch (const std::length_error&) {
      continue;
    }
    const auto opt = brute_force_opt(inst);
    ASSERT_NEAR(opt.cost, brute, 1e-9);
    ASSERT_TRUE(all_satisfied(cs, opt.edges));
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(BruteForceOpt, PathConsistentInstancesCostTouchedMinusOne) {
  // A constraint spanning the hidden path forces the whole path.
  for (std::int32_t n = 3; n <= 8; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto planted = random_path_instance(n, 3, seed);
      auto cs = planted.instance.constraints;
      cs.emplace_back(planted.path);
      const Instance inst(n, cs);
      EXPECT_EQ(brute_force_opt(inst).cost, n - 1);
    }
  }
}

TEST(BruteForceOpt, TautSolutionsLoseFeasibilityWithoutAnyEdge) {
  for (const Instance& inst :
       {Instance(3, {{0, 1, 2}, {1, 0, 2}}), Instance(5, {{0, 1, 2, 3, 4}})}) {
    const auto opt = brute_force_opt(inst);
    for (const Edge& drop : opt.edges.edges()) {
      EdgeSet less(inst.n);
      for (const Edge& e : opt.edges.edges()) {
        if (e != drop) less.add(e);
      }
      EXPECT_FALSE(all_satisfied(inst.constraints, less));
    }
  }
}

TEST(BruteForceOpt, RefusesOversizedInstances) {
  std::vector<VertexId> chain(17);
  std::iota(chain.begin(), chain.end(), 0);
  auto rev = chain;
  std::reverse(rev.begin(), rev.end());
  // 136 candidate pairs.
  EXPECT_THROW(brute_force_opt(Instance(17, {OrderedConstraint(chain),
                                             OrderedConstraint(rev)})),
               OracleCapacity);
}

TEST(HittingSetReduction, ConstraintCounts) {
  const auto a = hitting_set_reduction({3, {{0, 1}}}, 1);
  EXPECT_EQ(a.instance.n, 4);
  EXPECT_EQ(a.instance.constraints,
            (std::vector<OrderedConstraint>{{0, 1}, {0, 2}, {1, 2}, {0, 1, 3}}));
  const auto b = hitting_set_reduction({2, {{0}, {1}}}, 2);
  EXPECT_EQ(b.instance.r(), 5u);
  for (const auto& o : b.instance.constraints) {
    const auto ws = std::count_if(o.vertices().begin(), o.vertices().end(),
                                  [&](VertexId v) { return v >= b.universe; });
    EXPECT_LE(ws, 1);
  }
  EXPECT_THROW(hitting_set_reduction({2, {{}}}, 1), ValidationError);
  EXPECT_THROW(hitting_set_reduction({2, {{0}}}, 0), ValidationError);
}

TEST(HittingSet, BruteForceExamples) {
  EXPECT_EQ(brute_force_hitting_set({1, {{0}}}), 1);
  EXPECT_EQ(brute_force_hitting_set({3, {{0, 1}, {1, 2}}}), 1);
  EXPECT_EQ(brute_force_hitting_set({2, {{0}, {1}}}), 2);
}

TEST(ExtractHittingSet, RecoversPlantedSet) {
  const HittingSetInstance hs{4, {{0, 1}, {1, 2}, {3}}};
  const auto red = hitting_set_reduction(hs, 2);
  EdgeSet e(red.instance.n);
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) e.add(a, b);
  }
  for (std::int32_t l = 0; l < 2; ++l) {
    e.add(1, red.w(l));
    e.add(3, red.w(l));
  }
  EXPECT_EQ(extract_hitting_set(e, red, 0), (std::vector<VertexId>{1, 3}));
  EdgeSet missing(red.instance.n);
  EXPECT_THROW(extract_hitting_set(missing, red, 0), ValidationError);
}

TEST(ExtractHittingSet, MinimalSolutionGivesOptimalSet) {
  const HittingSetInstance hs{3, {{0, 1}, {1, 2}}};
  const auto red = hitting_set_reduction(hs, 1);
  const auto opt = brute_force_opt(red.instance);
  EXPECT_EQ(extract_hitting_set(opt.edges, red, 0), (std::vector<VertexId>{1}));
}

TEST(HittingSetReduction, OptimumIsCliquePlusOneHittingSetPerW) {
  std::size_t instances = 0;
  for (std::int32_t u = 1; u <= 4; ++u) {
    for (const auto& hs : testing_support::families_up_to_relabelling(u, 3)) {
      const auto h = brute_force_hitting_set(hs);
      for (std::int32_t w = 1; w <= 2; ++w) {
        const auto red = hitting_set_reduction(hs, w);
        const auto opt = brute_force_opt(red.instance);
        ASSERT_EQ(opt.cost, u * (u - 1) / 2 + w * h);
        std::size_t smallest = SIZE_MAX;
        for (std::int32_t l = 0; l < w; ++l) {
          const auto set = extract_hitting_set(opt.edges, red, l);
          for (const auto& s : hs.family) {
            EXPECT_TRUE(std::any_of(s.begin(), s.end(), [&](VertexId x) {
              return std::count(set.begin(), set.end(), x) > 0;
            }));
          }
          smallest = std::min(smallest, set.size());
        }
        EXPECT_EQ(smallest, static_cast<std::size_t>(h));
        ++instances;
      }
    }
  }
  EXPECT_GT(instances, 100u);
}

}  // namespace
}  // namespace ordnet
