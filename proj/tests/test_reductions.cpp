#include <gtest/gtest.h>

#include "mak/reductions.hpp"
#include "mak/solvers.hpp"
#include "oracle.hpp"

using namespace mak;
using boost::multiprecision::pow;

namespace {

BigInt best(const ReductionOutput& r) { return brute_force(r.instance, r.kind).value.as_integer(); }

std::int64_t item_total(const Instance& in, std::size_t j) {
  std::int64_t s = 0;
  for (const auto& row : in.utilities) s += row[j];
  return s;
}

}  // namespace

TEST(FromKnapsack, SmallExample) {
  const auto r = from_knapsack({1, 2}, {1, 2}, 2, 2);
  EXPECT_EQ(r.instance.utilities, (std::vector<std::vector<std::int64_t>>{{12, 3}, {1, 24}}));
  EXPECT_EQ(r.threshold, 24);
  EXPECT_EQ(r.kind, ObjectiveKind::Diverse);
  EXPECT_EQ(evaluate(r.instance, r.kind, Knapsack({1})).scalar(), 27);
  EXPECT_TRUE(verify_reduction(r, true));
}

TEST(FromKnapsack, ZeroTarget) {
  const auto r = from_knapsack({3}, {5}, 0, 1);
  EXPECT_EQ(r.threshold, 0);
  EXPECT_TRUE(verify_reduction(r, true));
}

TEST(FromKnapsack, Errors) {
  EXPECT_THROW(from_knapsack({0, 1}, {1, 1}, 1, 1), ValidationError);
  EXPECT_THROW(from_knapsack({1}, {0}, 1, 1), ValidationError);
}

TEST(FromKnapsack, WitnessesHold) {
  const auto r = from_knapsack({3, 1, 2}, {2, 3, 1}, 3, 3);
  ASSERT_TRUE(r.sp_witness && r.sc_witness);
  EXPECT_TRUE(verify_single_peaked(r.instance, *r.sp_witness));
  EXPECT_TRUE(verify_single_crossing(r.instance, *r.sc_witness));
}

TEST(FromKnapsack, ExhaustiveSources) {
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<std::int64_t> v(n, 1), w(n, 1);
    for (;;) {
      for (std::int64_t x = 0; x <= 6; ++x)
        for (std::int64_t y = 0; y <= 4; ++y)
          ASSERT_TRUE(verify_reduction(from_knapsack(v, w, x, y), oracle::knapsack_yes(v, w, x, y)));
      std::size_t i = 0;
      for (; i < 2 * n; ++i) {
        auto& d = i < n ? v[i] : w[i - n];
        if (++d <= 3) break;
        d = 1;
      }
      if (i == 2 * n) break;
    }
  }
}

TEST(FromPartition, Examples) {
  const auto yes = from_partition({2, 2});
  EXPECT_EQ(yes.instance.budget, 2);
  EXPECT_EQ(yes.threshold, 3);
  EXPECT_EQ(best(yes), 3);
  EXPECT_TRUE(verify_reduction(yes, true));

  const auto no = from_partition({2, 4});
  EXPECT_EQ(no.threshold, 4);
  EXPECT_LT(best(no), 4);
  EXPECT_TRUE(verify_reduction(no, false));
  EXPECT_THROW(from_partition({2, 3}), ValidationError);
}

TEST(FromExactPartition, Examples) {
  const auto yes = from_exact_partition({2, 2}, 1);
  EXPECT_EQ(yes.instance.utilities, (std::vector<std::vector<std::int64_t>>{{6, 6}, {6, 6}}));
  EXPECT_EQ(yes.threshold, 49);
  EXPECT_TRUE(verify_reduction(yes, true));

  // T = 6; u1 = (8, 10), u2 = (10, 8); both singletons give 9 * 11 = 99.
  const auto no = from_exact_partition({2, 4}, 1);
  EXPECT_EQ(no.threshold, 100);
  EXPECT_EQ(best(no), 99);
  EXPECT_TRUE(verify_reduction(no, false));
  EXPECT_THROW(from_exact_partition({2, 4}, 4), ValidationError);
  EXPECT_THROW(from_exact_partition({3}, 1), ValidationError);
}

TEST(FromErsp, Examples) {
  const auto yes = from_ersp({2, {{0}, {1}}}, 1, 2);
  EXPECT_EQ(yes.threshold, 4);
  EXPECT_TRUE(verify_reduction(yes, true));
  const auto no = from_ersp({1, {{0}, {0}}}, 1, 2);
  EXPECT_EQ(best(no), 3);
  EXPECT_TRUE(verify_reduction(no, false));
  EXPECT_THROW(from_ersp({3, {{0, 1}, {2}}}, 2, 1), ValidationError);
}

TEST(FromDominatingSet, Examples) {
  const auto tri = from_dominating_set({3, {{0, 1}, {1, 2}, {0, 2}}, std::nullopt}, 1);
  EXPECT_EQ(tri.threshold, 3);
  EXPECT_EQ(evaluate(tri.instance, tri.kind, Knapsack({2})).scalar(), 3);
  EXPECT_TRUE(verify_reduction(tri, true));
  EXPECT_TRUE(verify_reduction(from_dominating_set({3, {{0, 1}, {1, 2}}, std::nullopt}, 1), true));
  EXPECT_TRUE(verify_reduction(from_dominating_set({2, {}, std::nullopt}, 1), false));
}

TEST(FromMulticoloredClique, Triangle) {
  SourceGraph g{3, {{0, 1}, {1, 2}, {0, 2}}, std::vector<std::size_t>{0, 1, 2}};
  const auto r = from_multicolored_clique(g, 3);
  EXPECT_EQ(r.instance.num_voters(), 18u);
  EXPECT_EQ(r.instance.budget, 6);
  EXPECT_EQ(r.threshold, pow(BigInt(4), 18));
  EXPECT_EQ(evaluate(r.instance, r.kind, Knapsack({0, 1, 2, 3, 4, 5})).product(), r.threshold);
  EXPECT_TRUE(verify_reduction(r, true));
  for (std::size_t j = 0; j < r.instance.num_items(); ++j) EXPECT_EQ(item_total(r.instance, j), 3 * 3);

  g.edges.pop_back();
  EXPECT_TRUE(verify_reduction(from_multicolored_clique(g, 3), false));
}

TEST(FromMulticoloredClique, VoterCount) {
  for (std::int64_t k = 2; k <= 6; ++k) {
    const std::int64_t B = k + k * (k - 1) / 2;
    EXPECT_EQ(k + (k - 2) * (k * (k - 1) / 2) + 2 * k * (k - 1), k * B);
    SourceGraph g;
    g.vertices = static_cast<std::size_t>(k);
    g.coloring = std::vector<std::size_t>(g.vertices);
    for (std::size_t v = 0; v < g.vertices; ++v) (*g.coloring)[v] = v;
    EXPECT_EQ(static_cast<std::int64_t>(from_multicolored_clique(g, k).instance.num_voters()), k * B);
  }
}

TEST(FromMulticoloredClique, Errors) {
  SourceGraph g{2, {{0, 1}}, std::nullopt};
  EXPECT_THROW(from_multicolored_clique(g, 2), ValidationError);
  g.coloring = std::vector<std::size_t>{0, 0};
  EXPECT_THROW(from_multicolored_clique(g, 2), ValidationError);  // colour 1 unused
  g.coloring = std::vector<std::size_t>{0, 1};
  EXPECT_THROW(from_multicolored_clique(g, 1), ValidationError);
  EXPECT_NO_THROW(from_multicolored_clique(g, 2));
}

TEST(FromX3C, SmallestInstance) {
  SetSystem sys{3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
  const auto r = from_x3c(sys);
  const std::size_t m = 3, n = 3;
  EXPECT_EQ(r.instance.num_items(), 2 * m);
  EXPECT_EQ(r.instance.budget, 2);
  EXPECT_EQ(r.threshold, pow(BigInt(7), 8) * pow(BigInt(8), 6));
  for (std::size_t i = 0; i < m; ++i)
    EXPECT_GE(evaluate(r.instance, r.kind, Knapsack({i, 2 * m - 1 - i})).product(), r.threshold);
  EXPECT_TRUE(verify_reduction(r, true));
  for (std::size_t j = 0; j < 2 * m; ++j) EXPECT_EQ(item_total(r.instance, j), std::int64_t(6 + 6 * m + 6 * n + 3));
  for (const auto& row : r.instance.utilities)
    for (auto u : row) EXPECT_TRUE(u >= 0 && u <= 6);
  ASSERT_TRUE(r.sp_witness);
  EXPECT_TRUE(verify_single_peaked(r.instance, *r.sp_witness));
}

TEST(FromX3C, Errors) {
  EXPECT_THROW(from_x3c({3, {{0, 1, 2}}}), ValidationError);         // elements covered once
  EXPECT_THROW(from_x3c({4, {{0, 1, 2}}}), ValidationError);         // not a multiple of 3
  EXPECT_THROW(from_x3c({3, {{0, 1}, {0, 1}, {0, 1}}}), ValidationError);
}

TEST(Names, EncodeTheSource) {
  SourceGraph g{3, {{0, 1}, {1, 2}}, std::vector<std::size_t>{0, 1, 0}};
  const auto r = from_multicolored_clique(g, 2);
  EXPECT_EQ(r.instance.item_names[0], "vertex:0");
  EXPECT_EQ(r.instance.item_names[3], "edge:0-1");
  EXPECT_EQ(r.back_map.size(), r.instance.num_items());
}

TEST(VerifyReduction, Guardrail) {
  SolveOptions o;
  o.max_bruteforce_items = 1;
  EXPECT_THROW(verify_reduction(from_partition({2, 2}), true, o), GuardrailError);
}
