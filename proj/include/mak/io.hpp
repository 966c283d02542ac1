#pragma once

// JSON documents: instances, solutions, reduction outputs and generator
// parameters. Big numbers (fair products, thresholds) travel as decimal
// strings.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mak/core.hpp"
#include "mak/domains.hpp"
#include "mak/reductions.hpp"

namespace mak {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline void expect_keys(const Json& j, const std::string& where, std::set<std::string> required,
                        std::set<std::string> optional = {}) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    if (!required.count(k) && !optional.count(k)) throw ParseError(where + ": unknown key \"" + k + "\"");
  }
  for (const auto& k : required)
    if (!j.contains(k)) throw ParseError(where + ": missing key \"" + k + "\"");
}

inline std::int64_t get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(where + ": integer out of range");
  return j.get<std::int64_t>();
}

inline std::size_t get_index(const Json& j, const std::string& where) {
  const auto v = get_int(j, where);
  if (v < 0) throw ParseError(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

inline std::vector<std::int64_t> get_int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::size_t> get_index_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_index(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  using namespace detail;
  const Json doc = parse_json(text);
  expect_keys(doc, "document", {"voters", "items", "utilities", "budget"});

  Instance in;
  const auto n = get_index(doc["voters"], "voters");
  in.budget = get_int(doc["budget"], "budget");

  const auto& items = doc["items"];
  if (!items.is_array()) throw ParseError("items: expected an array");
  for (std::size_t j = 0; j < items.size(); ++j) {
    const std::string where = "items[" + std::to_string(j) + "]";
    expect_keys(items[j], where, {"name", "cost"});
    if (!items[j]["name"].is_string()) throw ParseError(where + ".name: expected a string");
    in.item_names.push_back(items[j]["name"].get<std::string>());
    in.costs.push_back(get_int(items[j]["cost"], where + ".cost"));
  }

  const auto& U = doc["utilities"];
  if (!U.is_array()) throw ParseError("utilities: expected an array");
  if (U.size() != n)
    throw ParseError("utilities: expected " + std::to_string(n) + " rows, found " + std::to_string(U.size()));
  for (std::size_t i = 0; i < U.size(); ++i) {
    const std::string where = "utilities[" + std::to_string(i) + "]";
    auto row = get_int_array(U[i], where);
    if (row.size() != in.item_names.size())
      throw ParseError(where + ": expected " + std::to_string(in.item_names.size()) + " entries, found " +
                       std::to_string(row.size()));
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] < 0) throw ParseError(where + "[" + std::to_string(j) + "]: utility must be >= 0");
    in.utilities.push_back(std::move(row));
  }
  require_valid(in);
  return in;
}

inline Json instance_json(const Instance& in) {
  Json doc;
  doc["voters"] = in.num_voters();
  doc["items"] = Json::array();
  for (std::size_t j = 0; j < in.num_items(); ++j)
    doc["items"].push_back({{"name", in.item_names[j]}, {"cost", in.costs[j]}});
  doc["utilities"] = in.utilities;
  doc["budget"] = in.budget;
  return doc;
}

inline std::string serialize_instance(const Instance& in) { return instance_json(in).dump(2) + "\n"; }

inline Json solution_json(const Instance& in, ObjectiveKind kind, const Solution& sol) {
  Json doc;
  doc["method"] = sol.method;
  doc["objective"] = std::string(to_string(kind));
  doc["selected"] = Json::array();
  for (auto j : sol.knapsack) doc["selected"].push_back(in.item_names.at(j));
  doc["total_cost"] = sol.total_cost;
  doc["value"] = sol.value.to_string();
  doc["per_voter_utility"] = sol.per_voter_utility;
  if (sol.approximate) doc["approximate"] = true;
  return doc;
}

inline std::string emit_solution(const Instance& in, ObjectiveKind kind, const Solution& sol) {
  return solution_json(in, kind, sol).dump(2) + "\n";
}

// Item names -> Knapsack. Unknown or repeated names are parse errors.
inline Knapsack parse_selection(const Instance& in, const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) throw ParseError("selection: item \"" + name + "\" listed twice");
    std::size_t j = 0;
    while (j < in.num_items() && in.item_names[j] != name) ++j;
    if (j == in.num_items()) throw ParseError("selection: no item named \"" + name + "\"");
    idx.push_back(j);
  }
  return Knapsack(std::move(idx));
}

// Item orders are written as arrays of item names, voter orders as arrays of
// voter indices.
inline ItemOrder parse_item_order(const Instance& in, std::string_view text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_array()) throw ParseError("order: expected an array of item names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_string()) throw ParseError("order[" + std::to_string(i) + "]: expected an item name");
    names.push_back(doc[i].get<std::string>());
  }
  std::vector<std::size_t> p;
  for (const auto& name : names) {
    std::size_t j = 0;
    while (j < in.num_items() && in.item_names[j] != name) ++j;
    if (j == in.num_items()) throw ParseError("order: no item named \"" + name + "\"");
    p.push_back(j);
  }
  ItemOrder order(std::move(p));
  if (!order.is_valid(in.num_items())) throw ParseError("order: not a permutation of the items");
  return order;
}

inline VoterOrder parse_voter_order(const Instance& in, std::string_view text) {
  VoterOrder order(detail::get_index_array(detail::parse_json(text), "order"));
  if (!order.is_valid(in.num_voters())) throw ParseError("order: not a permutation of the voters");
  return order;
}

inline Json item_order_json(const Instance& in, const ItemOrder& order) {
  Json out = Json::array();
  for (auto j : order.values()) out.push_back(in.item_names[j]);
  return out;
}

inline Json reduction_json(const ReductionOutput& r) {
  Json doc;
  doc["reduction"] = r.reduction;
  doc["objective"] = std::string(to_string(r.kind));
  doc["threshold"] = r.threshold.str();
  doc["instance"] = instance_json(r.instance);
  if (r.sp_witness) doc["sp_witness"] = item_order_json(r.instance, *r.sp_witness);
  if (r.sc_witness) doc["sc_witness"] = r.sc_witness->values();
  Json back = Json::object();
  for (std::size_t j = 0; j < r.back_map.size(); ++j) back[r.instance.item_names[j]] = r.back_map[j];
  doc["back_map"] = std::move(back);
  return doc;
}

namespace detail {

inline SourceGraph parse_graph(const Json& p, bool coloured) {
  SourceGraph g;
  g.vertices = get_index(p["vertices"], "vertices");
  const auto& edges = p["edges"];
  if (!edges.is_array()) throw ParseError("edges: expected an array");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    auto ends = get_index_array(edges[e], where);
    if (ends.size() != 2) throw ParseError(where + ": expected a pair of vertices");
    g.edges.emplace_back(ends[0], ends[1]);
  }
  if (coloured) g.coloring = get_index_array(p["coloring"], "coloring");
  return g;
}

inline SetSystem parse_sets(const Json& p) {
  SetSystem s;
  s.universe_size = get_index(p["universe_size"], "universe_size");
  const auto& sets = p["sets"];
  if (!sets.is_array()) throw ParseError("sets: expected an array");
  for (std::size_t i = 0; i < sets.size(); ++i)
    s.sets.push_back(get_index_array(sets[i], "sets[" + std::to_string(i) + "]"));
  return s;
}

}  // namespace detail

inline const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names = {"knapsack", "partition", "exact-partition", "ersp",
                                                 "dominating-set", "multicolored-clique", "x3c"};
  return names;
}

// Generator parameters by reduction:
//   knapsack             {values, weights, x, y}
//   partition            {s}
//   exact-partition      {s, k}
//   ersp                 {universe_size, sets, d, k}
//   dominating-set       {vertices, edges, k}
//   multicolored-clique  {vertices, edges, coloring, k}
//   x3c                  {universe_size, sets}
// Vertices and universe elements are 0-based.
inline ReductionOutput generate_reduction(std::string_view name, std::string_view params_text) {
  using namespace detail;
  const Json p = parse_json(params_text);
  if (name == "knapsack") {
    expect_keys(p, "params", {"values", "weights", "x", "y"});
    return from_knapsack(get_int_array(p["values"], "values"), get_int_array(p["weights"], "weights"),
                         get_int(p["x"], "x"), get_int(p["y"], "y"));
  }
  if (name == "partition") {
    expect_keys(p, "params", {"s"});
    return from_partition(get_int_array(p["s"], "s"));
  }
  if (name == "exact-partition") {
    expect_keys(p, "params", {"s", "k"});
    return from_exact_partition(get_int_array(p["s"], "s"), get_int(p["k"], "k"));
  }
  if (name == "ersp") {
    expect_keys(p, "params", {"universe_size", "sets", "d", "k"});
    return from_ersp(parse_sets(p), get_int(p["d"], "d"), get_int(p["k"], "k"));
  }
  if (name == "dominating-set") {
    expect_keys(p, "params", {"vertices", "edges", "k"});
    return from_dominating_set(parse_graph(p, false), get_int(p["k"], "k"));
  }
  if (name == "multicolored-clique") {
    expect_keys(p, "params", {"vertices", "edges", "coloring", "k"});
    return from_multicolored_clique(parse_graph(p, true), get_int(p["k"], "k"));
  }
  if (name == "x3c") {
    expect_keys(p, "params", {"universe_size", "sets"});
    return from_x3c(parse_sets(p));
  }
  throw ParseError("unknown reduction \"" + std::string(name) + "\"");
}

}  // namespace mak
