#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mak/io.hpp"
#include "mak/solvers.hpp"
#include "oracle.hpp"

using namespace mak;

namespace {

const char* kMinimal = R"({"voters": 1, "items": [{"name": "a", "cost": 1}], "utilities": [[0]], "budget": 0})";

std::string parse_message(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Parse, Minimal) {
  const auto in = parse_instance(kMinimal);
  EXPECT_EQ(in.num_voters(), 1u);
  EXPECT_EQ(in.item_names, std::vector<std::string>{"a"});
  EXPECT_EQ(in.budget, 0);
}

TEST(Parse, NegativeUtilityNamesTheCell) {
  const std::string doc =
      R"({"voters": 1, "items": [{"name": "a", "cost": 1}, {"name": "b", "cost": 1}], "utilities": [[0, -2]], "budget": 0})";
  EXPECT_THROW(parse_instance(doc), ParseError);
  EXPECT_NE(parse_message(doc).find("utilities[0][1]"), std::string::npos);
}

TEST(Parse, Rejections) {
  EXPECT_NE(parse_message(R"({"voters": 1, "items": [], "utilities": [[]], "budget": 0, "x": 1})").find("unknown key"),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"voters": 2, "items": [{"name": "a", "cost": 1}], "utilities": [[0]], "budget": 0})")
                .find("utilities"),
            std::string::npos);
  EXPECT_NE(parse_message(R"({"voters": 1, "items": [{"name": "a", "cost": "1"}], "utilities": [[0]], "budget": 0})")
                .find("items[0].cost"),
            std::string::npos);
  EXPECT_NE(parse_message("{\"voters\": 1,\n ]").find("malformed"), std::string::npos);
  EXPECT_THROW(parse_instance(R"({"voters": 1, "items": [{"name": "a", "cost": 0}], "utilities": [[0]], "budget": 0})"),
               ValidationError);
}

TEST(Parse, RoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto in = oracle::random_instance(rng);
    EXPECT_EQ(parse_instance(serialize_instance(in)), in);
  }
}

TEST(Emit, EmptyFairValueIsOne) {
  const auto in = parse_instance(kMinimal);
  const auto sol = brute_force(in, ObjectiveKind::Fair);
  const auto doc = Json::parse(emit_solution(in, ObjectiveKind::Fair, sol));
  EXPECT_EQ(doc["value"], "1");
  EXPECT_TRUE(doc["selected"].empty());
  EXPECT_FALSE(doc.contains("approximate"));
}

TEST(Emit, ExampleTwoValues) {
  using boost::multiprecision::pow;
  const auto in = fixtures::example2();
  const auto fair = solve_fair_xp_dp(in);
  const auto doc = Json::parse(emit_solution(in, ObjectiveKind::Fair, fair));
  EXPECT_EQ(doc["value"], BigInt(pow(BigInt(4), 300) * pow(BigInt(3), 200) * pow(BigInt(2), 100)).str());
  EXPECT_EQ(doc["objective"], "fair");

  const auto ib = Json::parse(emit_solution(in, ObjectiveKind::IB, solve_ib_dp(in)));
  EXPECT_EQ(ib["value"], "1800");
  EXPECT_EQ(ib["selected"].size(), 6u);
}

TEST(Emit, Deterministic) {
  const auto in = fixtures::example2({3, 2, 1, 1, 1, 1});
  const auto a = emit_solution(in, ObjectiveKind::Fair, solve_fair_xp_dp(in));
  const auto b = emit_solution(in, ObjectiveKind::Fair, solve_fair_xp_dp(in));
  EXPECT_EQ(a, b);
}

TEST(Emit, ValueReevaluatesFromSelection) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto in = oracle::random_instance(rng);
    const auto sol = solve_greedy(in, ObjectiveKind::Fair);
    const auto doc = Json::parse(emit_solution(in, ObjectiveKind::Fair, sol));
    EXPECT_TRUE(doc["approximate"].get<bool>());
    const auto s = parse_selection(in, doc["selected"].get<std::vector<std::string>>());
    EXPECT_EQ(evaluate(in, ObjectiveKind::Fair, s).to_string(), doc["value"].get<std::string>());
  }
}

TEST(Orders, ParseAndRender) {
  const auto in = parse_instance(
      R"({"voters": 2, "items": [{"name": "a", "cost": 1}, {"name": "b", "cost": 1}], "utilities": [[0, 1], [1, 0]], "budget": 1})");
  EXPECT_EQ(parse_item_order(in, R"(["b", "a"])").values(), (std::vector<std::size_t>{1, 0}));
  EXPECT_THROW(parse_item_order(in, R"(["b", "b"])"), ParseError);
  EXPECT_THROW(parse_item_order(in, R"(["c", "a"])"), ParseError);
  EXPECT_EQ(parse_voter_order(in, "[1, 0]").values(), (std::vector<std::size_t>{1, 0}));
  EXPECT_THROW(parse_voter_order(in, "[2, 0]"), ParseError);
}

TEST(Generate, FromParams) {
  const auto r = generate_reduction("partition", R"({"s": [2, 2]})");
  const auto doc = reduction_json(r);
  EXPECT_EQ(doc["threshold"], "3");
  EXPECT_EQ(doc["objective"], "fair");
  EXPECT_EQ(parse_instance(doc["instance"].dump()), r.instance);

  const auto x = reduction_json(generate_reduction("x3c", R"({"universe_size": 3, "sets": [[0,1,2],[0,1,2],[0,1,2]]})"));
  EXPECT_EQ(x["threshold"], BigInt(boost::multiprecision::pow(BigInt(7), 8) * boost::multiprecision::pow(BigInt(8), 6)).str());
  EXPECT_EQ(x["sp_witness"].size(), 6u);

  EXPECT_THROW(generate_reduction("partition", R"({"s": [2, 2], "k": 1})"), ParseError);
  EXPECT_THROW(generate_reduction("sat", "{}"), ParseError);
  EXPECT_THROW(generate_reduction("partition", R"({"s": [3]})"), ValidationError);
  EXPECT_NO_THROW(generate_reduction(
      "multicolored-clique", R"({"vertices": 3, "edges": [[0,1],[1,2],[0,2]], "coloring": [0,1,2], "k": 3})"));
  EXPECT_NO_THROW(generate_reduction("dominating-set", R"({"vertices": 3, "edges": [[0,1]], "k": 1})"));
  EXPECT_NO_THROW(generate_reduction("ersp", R"({"universe_size": 2, "sets": [[0],[1]], "d": 1, "k": 2})"));
  EXPECT_NO_THROW(generate_reduction("exact-partition", R"({"s": [2, 2], "k": 1})"));
  EXPECT_NO_THROW(generate_reduction("knapsack", R"({"values": [1, 2], "weights": [1, 2], "x": 2, "y": 2})"));
}
