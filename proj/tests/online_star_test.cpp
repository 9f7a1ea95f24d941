#include <gtest/gtest.h>

#include <cmath>

#include "ordnet/adversaries.hpp"
#include "ordnet/generators.hpp"
#include "ordnet/harness.hpp"
#include "ordnet/online_star.hpp"

namespace ordnet {
namespace {

std::vector<Edge> sorted(std::vector<Edge> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(StarSolver, FreshState) {
  EXPECT_NO_THROW(StarSolver(2));
  EXPECT_THROW(StarSolver(1), ValidationError);
  StarSolver s(4);
  EXPECT_EQ(s.edge_count(), 0u);
  EXPECT_TRUE(s.candidates().empty());
}

TEST(StarSolver, SplitsBetweenCandidatesThenRevealsCenter) {
  StarSolver s(6);
  const auto first = s.process({0, 1, 2, 3, 4});
  EXPECT_EQ(first, (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {0, 4}}));
  EXPECT_EQ(s.candidates(), (std::vector<VertexId>{0, 1}));

  const auto second = s.process({0, 2, 5});
  EXPECT_EQ(sorted(second), (std::vector<Edge>{{0, 3}, {0, 5}}));
  EXPECT_EQ(s.center(), 0);
  EXPECT_EQ(s.edge_count(), 6u);
}

TEST(StarSolver, DisjointFirstPairsAreInconsistent) {
  StarSolver s(5);
  s.process({0, 1});
  EXPECT_THROW(s.process({2, 3, 4}), NotStarConsistent);
  EXPECT_THROW(s.process({0, 1}), NotStarConsistent);
}

TEST(StarSolver, PairConstraintOnCandidatesAddsOneEdge) {
  StarSolver s(4);
  EXPECT_EQ(s.process({1, 0}).size(), 1u);
  EXPECT_TRUE(s.process({0, 1}).empty());
}

TEST(StarSolver, AfterRevealEveryNewEdgeTouchesCenter) {
  StarSolver s(7);
  s.process({2, 5, 0, 1});
  s.process({5, 3, 4});
  ASSERT_EQ(s.center(), 5);
  const auto added = s.process({6, 5, 1});
  for (const Edge& e : added) EXPECT_TRUE(e.u == 5 || e.v == 5);
}

// Closed form against the adversary: one edge between the candidates, one per
// split vertex, then the centre picks up the half assigned to the other
// candidate. The final constraint is already satisfied by that reconnection.
std::size_t adversary_closed_form(std::int32_t n) {
  const auto split = static_cast<std::size_t>(n - 2);
  return 1 + split + (split + 1) / 2;
}

TEST(StarSolver, AgainstAdversaryMatchesClosedForm) {
  for (std::int32_t n = 4; n <= 40; ++n) {
    auto alg = make_algorithm({"star", n, {}});
    StarLbAdversary adv(n);
    const auto t = duel(*alg, adv);
    ASSERT_TRUE(t.feasible) << n;
    EXPECT_EQ(t.final_edges.size(), adversary_closed_form(n)) << n;
    ASSERT_TRUE(all_satisfied(t.emitted.constraints, *adv.known_opt()));
    EXPECT_EQ(adv.known_opt()->size(), static_cast<std::size_t>(n - 1));
    const double ratio =
        static_cast<double>(t.final_edges.size()) / static_cast<double>(n - 1);
    if (n >= 20) {
      EXPECT_GE(ratio, 1.4) << n;
      EXPECT_LE(ratio, 1.6) << n;
    }
  }
  {
    auto alg = make_algorithm({"star", 6, {}});
    StarLbAdversary adv(6);
    EXPECT_EQ(duel(*alg, adv).final_edges.size(), 7u);
  }
}

TEST(StarSolver, RandomStarConsistentRunsStayWithinBound) {
  for (std::int32_t n = 3; n <= 25; ++n) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto planted = random_star_instance(n, 1 + seed % 12, seed * 7 + n);
      StarSolver s(n);
      std::vector<OrderedConstraint> seen;
      for (const auto& o : planted.instance.constraints) {
        s.process(o);
        seen.push_back(o);
        ASSERT_TRUE(all_satisfied(seen, s.edges()));
      }
      const auto bound =
          static_cast<std::size_t>(std::ceil(1.5 * (n - 1))) + 1;
      EXPECT_LE(s.edge_count(), bound) << "n=" << n << " seed=" << seed;
    }
  }
}

}  // namespace
}  // namespace ordnet
