#include <gtest/gtest.h>

#include <cmath>

#include "ordnet/generators.hpp"
#include "ordnet/online_general.hpp"
#include "ordnet/oracle.hpp"

namespace ordnet {
namespace {

GeneralOptions opts(double c, std::size_t r, std::uint64_t seed,
                    bool repair = true) {
  GeneralOptions o;
  o.c_param = c;
  o.r_estimate = r;
  o.seed = seed;
  o.repair = repair;
  return o;
}

TEST(ThresholdCount, Examples) {
  EXPECT_EQ(threshold_count(8, 1.5, 8), 7);
  EXPECT_EQ(threshold_count(2, 2.0, 1), 2);
  EXPECT_THROW(threshold_count(8, 1.0, 8), ValidationError);
  EXPECT_THROW(threshold_count(1, 2.0, 8), ValidationError);
  EXPECT_THROW(threshold_count(8, 2.0, 0), ValidationError);
  EXPECT_THROW(GeneralSolver(8, opts(1.0, 8, 0)), ValidationError);
}

// A c just above (t - 1) / ln 2 gives exactly t when n = 2, r = 1.
double c_for(std::int32_t t) {
  return std::max(1.0 + 1e-6, static_cast<double>(t - 1) / std::log(2.0) + 1e-6);
}

TEST(Threshold, MeanOfMinimumOfUniforms) {
  for (std::int32_t t : {1, 2, 4, 8}) {
    const double c = c_for(t);
    GeneralSolver s(2, opts(c, 1, 77));
    ASSERT_EQ(s.t(), t);
    // 10^5 thresholds from distinct seeds of the same pair.
    double sum = 0.0;
    const int samples = 100000;
    for (int k = 0; k < samples; ++k) {
      GeneralSolver probe(2, opts(c, 1, 1000 + k));
      sum += probe.threshold({0, 1});
    }
    EXPECT_NEAR(sum / samples, 1.0 / (t + 1), 0.01) << "t=" << t;
  }
}

TEST(Threshold, MemoizedAndDeterministic) {
  GeneralSolver a(6, opts(2.0, 4, 5));
  GeneralSolver b(6, opts(2.0, 4, 5));
  EXPECT_EQ(a.threshold({1, 4}), a.threshold({1, 4}));
  EXPECT_EQ(a.threshold({1, 4}), b.threshold({1, 4}));
  EXPECT_NE(a.threshold({1, 4}), a.threshold({1, 5}));
  EXPECT_THROW(a.threshold({1, 6}), ValidationError);
}

TEST(Threshold, LargerCNeverRaisesAThreshold) {
  GeneralSolver low(10, opts(1.1, 5, 9));
  GeneralSolver high(10, opts(3.0, 5, 9));
  ASSERT_LT(low.t(), high.t());
  for (VertexId a = 0; a < 10; ++a) {
    for (VertexId b = a + 1; b < 10; ++b) {
      EXPECT_LE(high.threshold({a, b}), low.threshold({a, b}));
    }
  }
}

TEST(GeneralSolver, PairConstraintAlwaysRounds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneralSolver s(4, opts(2.0, 1, seed));
    const auto added = s.process({0, 1});
    EXPECT_EQ(added, (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(s.repairs_used(), 0u);
  }
}

TEST(GeneralSolver, TripleNeedsTwoOrThreeEdges) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneralSolver s(3, opts(2.0, 1, seed));
    const auto added = s.process({0, 1, 2});
    EXPECT_TRUE(is_ordered_satisfied({0, 1, 2}, s.edges()));
    EXPECT_GE(added.size(), 2u);
    EXPECT_LE(added.size(), 3u);
  }
}

TEST(GeneralSolver, DeterministicGivenSeed) {
  const auto inst = random_general_instance(9, 5, 6, 3);
  GeneralSolver a(9, opts(1.5, 5, 11));
  GeneralSolver b(9, opts(1.5, 5, 11));
  for (const auto& o : inst.constraints) EXPECT_EQ(a.process(o), b.process(o));
  EXPECT_EQ(a.edges(), b.edges());
}

TEST(GeneralSolver, RoundedEdgesRespectThresholds) {
  const auto inst = random_general_instance(10, 6, 7, 21);
  GeneralSolver s(10, opts(2.0, 6, 4, /*repair=*/false));
  for (const auto& o : inst.constraints) {
    s.process(o);
    for (const auto& [e, w] : s.weights().nonzero()) {
      if (w >= s.threshold(e)) EXPECT_TRUE(s.edges().contains(e));
    }
    for (const Edge& e : s.edges().edges()) {
      EXPECT_GE(s.weights().get(e), s.threshold(e));
    }
  }
}

TEST(GeneralSolver, RepairMakesEveryRunFeasible) {
  for (std::int32_t n = 8; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto inst = random_general_instance(n, 6, n, seed + 100 * n);
      GeneralSolver s(n, opts(1.1, 6, seed));
      for (const auto& o : inst.constraints) s.process(o);
      EXPECT_TRUE(all_satisfied(inst.constraints, s.edges()));
    }
  }
}

TEST(GeneralSolver, DoublingEstimateRaisesT) {
  GeneralOptions o;
  o.c_param = 2.0;
  o.seed = 1;
  GeneralSolver s(6, o);
  EXPECT_EQ(s.r_estimate(), 1u);
  const auto t0 = s.t();
  s.process({0, 1});
  EXPECT_EQ(s.r_estimate(), 1u);
  s.process({1, 2});
  EXPECT_EQ(s.r_estimate(), 2u);
  s.process({2, 3});
  EXPECT_EQ(s.r_estimate(), 4u);
  EXPECT_GT(s.t(), t0);
  EXPECT_TRUE(s.edges().contains(0, 1));
}

TEST(GeneralSolver, WeightedRunsAreFeasible) {
  const auto base = random_general_instance(8, 4, 5, 17);
  CostMap costs;
  SplitMix64 rng(3);
  for (VertexId a = 0; a < 8; ++a) {
    for (VertexId b = a + 1; b < 8; ++b) costs[{a, b}] = 1.0 + rng.below(5);
  }
  const Instance inst(8, base.constraints, costs);
  auto o = opts(2.0, 4, 2);
  o.costs = costs;
  GeneralSolver s(8, o);
  for (const auto& c : inst.constraints) s.process(c);
  EXPECT_TRUE(all_satisfied(inst.constraints, s.edges()));
  EXPECT_GE(total_cost(s.edges(), costs), brute_force_opt(inst).cost - 1e-9);
}

}  // namespace
}  // namespace ordnet
