#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordnet/generators.hpp"
#include "ordnet/harness.hpp"

namespace ordnet {
namespace {

TEST(InstanceFile, ParsesCommentsFamilyAndConstraints) {
  std::istringstream in(
      "# family: random-path\n# anything\n\nn 5\n0 1 2\n  3 4 \n");
  const auto f = parse_instance(in);
  EXPECT_EQ(f.family, "random-path");
  EXPECT_EQ(f.instance.n, 5);
  EXPECT_EQ(f.instance.constraints,
            (std::vector<OrderedConstraint>{{0, 1, 2}, {3, 4}}));
  EXPECT_FALSE(f.instance.costs);
}

TEST(InstanceFile, RoundTrips) {
  const auto inst = random_general_instance(7, 4, 7, 2);
  std::stringstream buf;
  write_instance(buf, inst, "random-general");
  const auto back = parse_instance(buf);
  EXPECT_EQ(back.instance.constraints, inst.constraints);
  EXPECT_EQ(back.family, "random-general");
}

TEST(InstanceFile, RejectsMalformedInput) {
  for (const char* text : {"0 1\n", "n x\n", "n 3\n0\n", "n 3\n0 0\n",
                           "n 3\n0 5\n", "n 3\n0 a\n", "", "n 3\n0 1\ncosts c\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(parse_instance(in), ParseError) << text;
  }
}

TEST(InstanceFile, LoadsRelativeCostFile) {
  const auto dir = std::filesystem::temp_directory_path() / "ordnet_harness_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c.txt") << "0 1 2.5\n1 2 4\n";
  std::ofstream(dir / "i.txt") << "n 3\ncosts c.txt\n0 1 2\n";
  const auto f = read_instance((dir / "i.txt").string());
  ASSERT_TRUE(f.instance.costs);
  EXPECT_DOUBLE_EQ(edge_cost(f.instance.costs, {0, 1}), 2.5);
  EXPECT_DOUBLE_EQ(edge_cost(f.instance.costs, {0, 2}), 1.0);
  std::filesystem::remove_all(dir);
}

TEST(EdgeFile, RoundTripsAndRejectsGarbage) {
  const EdgeSet e(4, {{0, 1}, {2, 3}});
  std::stringstream buf;
  write_edges(buf, e);
  EXPECT_EQ(buf.str(), "0 1\n2 3\n");
  EXPECT_EQ(parse_edges(buf, 4), e);
  std::istringstream bad("0 1 2\n");
  EXPECT_THROW(parse_edges(bad, 4), ParseError);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(parse_edges(loop, 4), ParseError);
}

TEST(Duel, TranscriptCountsAreCumulative) {
  auto alg = make_algorithm({"path", 8, {}});
  auto adv = make_adversary("path-lb", 8, 1);
  const auto t = duel(*alg, *adv);
  std::size_t total = 0;
  for (const auto& r : t.rounds) {
    total += r.added.size();
    EXPECT_EQ(r.cumulative_edges, total);
    EXPECT_DOUBLE_EQ(r.cumulative_cost, static_cast<double>(total));
  }
  EXPECT_TRUE(t.feasible);
  EXPECT_EQ(t.emitted.r(), t.rounds.size());
}

TEST(Duel, PathAdversaryAtTenMatchesRatio) {
  auto alg = make_algorithm({"path", 10, {}});
  auto adv = make_adversary("path-lb", 10, 3);
  auto t = duel(*alg, *adv);
  ASSERT_TRUE(attach_opt(t, adv->known_opt()));
  EXPECT_EQ(t.alg_cost, 17.0);
  EXPECT_EQ(*t.opt_cost, 9.0);
  EXPECT_NEAR(*t.ratio, 17.0 / 9.0, 1e-12);
}

TEST(Duel, OfflineOptHasRatioOne) {
  const auto inst = random_general_instance(6, 3, 6, 5);
  const auto t = run_offline_opt(inst);
  EXPECT_TRUE(t.feasible);
  EXPECT_EQ(t.ratio, 1.0);
}

TEST(Factories, RejectUnknownNames) {
  EXPECT_THROW(make_algorithm({"greedy", 5, {}}), ValidationError);
  EXPECT_THROW(make_adversary("nobody", 5, 0), ValidationError);
}

TEST(Csv, HeaderAndRowsRoundTrip) {
  EXPECT_EQ(csv_header(false),
            "instance_id,family,n,r,alg,seed,c_param,t,alg_edges,alg_cost,"
            "opt_cost,ratio,frac_cost,repairs_used");
  ResultRow a{"x", "random-path", 6, 4, "path", 3, {}, {}, 7, 7.0, 5.0, 1.4,
              {}, {}};
  ResultRow b{"y", "random-general", 8, 5, "general", 9, 1.5, 7, 10, 10.0,
              {}, {}, 6.25, 2};
  std::stringstream buf;
  buf << csv_header(true) << "\n"
      << csv_line(a, "2026-01-01T00:00:00Z") << "\n"
      << csv_header(true) << "\n"
      << csv_line(b, "2026-01-01T00:00:01Z") << "\n";
  const auto rows = parse_csv(buf);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].family, "random-path");
  EXPECT_EQ(rows[0].ratio, 1.4);
  EXPECT_FALSE(rows[0].c_param);
  EXPECT_EQ(rows[1].t, 7);
  EXPECT_EQ(rows[1].repairs_used, 2u);
  EXPECT_FALSE(rows[1].opt_cost);
  EXPECT_EQ(csv_line(b), csv_line(rows[1]));
}

TEST(Report, MeanAndMaxPerFamilyAndAlgorithm) {
  std::vector<ResultRow> rows(3);
  rows[0].family = rows[1].family = "f";
  rows[2].family = "g";
  rows[0].alg = rows[1].alg = rows[2].alg = "path";
  rows[0].ratio = 1.0;
  rows[1].ratio = 2.0;
  rows[0].alg_cost = 4;
  rows[1].alg_cost = 6;
  const auto lines = aggregate(rows);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].runs, 2u);
  EXPECT_DOUBLE_EQ(lines[0].mean_ratio, 1.5);
  EXPECT_DOUBLE_EQ(lines[0].max_ratio, 2.0);
  EXPECT_DOUBLE_EQ(lines[0].mean_alg_cost, 5.0);
  EXPECT_EQ(lines[1].rated, 0u);
  std::ostringstream out;
  write_report(out, lines);
  EXPECT_EQ(out.str(),
            "family,alg,runs,rated,mean_ratio,max_ratio,mean_alg_cost\n"
            "f,path,2,2,1.5,2,5\n"
            "g,path,1,0,,,0\n");
}

}  // namespace
}  // namespace ordnet
