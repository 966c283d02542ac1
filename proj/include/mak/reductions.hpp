#pragma once

// Instance generators for the hardness constructions. Each one maps a source
// instance to a multiagent knapsack instance plus a decision threshold such
// that the source is a yes-instance iff some feasible knapsack reaches the
// threshold. Item names carry the back-mapping to source objects.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mak/core.hpp"
#include "mak/domains.hpp"
#include "mak/solvers/brute_force.hpp"

namespace mak {

struct SourceGraph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::vector<std::size_t>> coloring;  // vertex -> colour
};

struct SetSystem {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;
};

struct ReductionOutput {
  std::string reduction;
  Instance instance;
  ObjectiveKind kind = ObjectiveKind::IB;
  BigInt threshold = 0;
  std::optional<ItemOrder> sp_witness;
  std::optional<VoterOrder> sc_witness;
  std::vector<std::string> back_map;  // per item, what it stands for
};

namespace detail {

[[noreturn]] inline void reject(std::string what) {
  throw ValidationError(std::vector<std::string>{std::move(what)});
}

inline void check_graph(const SourceGraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u >= g.vertices || v >= g.vertices) reject("edge references a missing vertex");
    if (u == v) reject("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      reject("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  if (g.coloring && g.coloring->size() != g.vertices) reject("colouring must cover every vertex");
}

inline void check_sets(const SetSystem& s) {
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    std::set<std::size_t> distinct(s.sets[i].begin(), s.sets[i].end());
    if (distinct.size() != s.sets[i].size()) reject("set " + std::to_string(i) + " repeats an element");
    for (auto e : s.sets[i])
      if (e >= s.universe_size) reject("set " + std::to_string(i) + " has an element outside the universe");
  }
}

inline ReductionOutput finish(ReductionOutput r) {
  require_valid(r.instance);
  return r;
}

inline ItemOrder identity_items(const Instance& in) { return ItemOrder::identity(in.num_items()); }

}  // namespace detail

// Knapsack (values, weights, value target x, weight limit y) -> Diverse.
// Voter i has a huge peak 3n^2 * value_i on item i and small utilities
// elsewhere, so diverse value >= 3n^2 x iff the chosen source items reach x.
inline ReductionOutput from_knapsack(const std::vector<std::int64_t>& values,
                                     const std::vector<std::int64_t>& weights, std::int64_t x,
                                     std::int64_t y) {
  const std::size_t n = values.size();
  if (n == 0) detail::reject("knapsack source needs at least one item");
  if (weights.size() != n) detail::reject("values and weights differ in length");
  for (auto v : values)
    if (v < 1) detail::reject("knapsack values must be >= 1");
  for (auto w : weights)
    if (w < 1) detail::reject("knapsack weights must be >= 1");
  if (x < 0 || y < 0) detail::reject("x and y must be >= 0");

  const auto big = static_cast<std::int64_t>(3 * n * n);
  ReductionOutput r;
  r.reduction = "knapsack";
  r.kind = ObjectiveKind::Diverse;
  r.threshold = BigInt(big) * x;
  r.instance.budget = y;
  r.instance.costs = weights;
  r.instance.utilities.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      auto& u = r.instance.utilities[i - 1][j - 1];
      if (i == j) u = big * values[j - 1];
      else if (i > j) u = static_cast<std::int64_t>(j);
      else u = static_cast<std::int64_t>(2 * n - j + 1);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    r.instance.item_names.push_back("x:" + std::to_string(j));
    r.back_map.push_back("source item " + std::to_string(j) + " (value " +
                         std::to_string(values[j]) + ", weight " + std::to_string(weights[j]) + ")");
  }
  r.sp_witness = detail::identity_items(r.instance);
  r.sc_witness = VoterOrder::identity(n);
  return detail::finish(std::move(r));
}

// Partition (all entries even) -> Fair with one voter.
inline ReductionOutput from_partition(const std::vector<std::int64_t>& s) {
  if (s.empty()) detail::reject("partition source needs at least one integer");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] % 2 != 0)
      detail::reject("partition entries must be positive and even (entry " + std::to_string(i) + ")");
    total += s[i];
  }
  ReductionOutput r;
  r.reduction = "partition";
  r.kind = ObjectiveKind::Fair;
  r.threshold = total / 2 + 1;
  r.instance.budget = total / 2;
  r.instance.costs = s;
  r.instance.utilities = {s};
  for (std::size_t i = 0; i < s.size(); ++i) {
    r.instance.item_names.push_back("s:" + std::to_string(i));
    r.back_map.push_back("integer " + std::to_string(s[i]) + " at position " + std::to_string(i));
  }
  return detail::finish(std::move(r));
}

// Exact Partition (entries divisible by 2 and by k) -> Fair with two voters
// and unit costs; each item carries T + T/k in total, split so that the two
// voters balance exactly on a k-subset summing to T/2.
inline ReductionOutput from_exact_partition(const std::vector<std::int64_t>& s, std::int64_t k) {
  if (s.empty()) detail::reject("exact partition source needs at least one integer");
  if (k < 1) detail::reject("k must be >= 1");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] % 2 != 0 || s[i] % k != 0)
      detail::reject("exact partition entries must be positive and divisible by 2 and k (entry " +
                     std::to_string(i) + ")");
    total += s[i];
  }
  ReductionOutput r;
  r.reduction = "exact-partition";
  r.kind = ObjectiveKind::Fair;
  const BigInt side = 1 + BigInt(k) * total + total / 2;
  r.threshold = side * side;
  r.instance.budget = k;
  r.instance.costs.assign(s.size(), 1);
  r.instance.utilities.assign(2, {});
  for (std::size_t i = 0; i < s.size(); ++i) {
    r.instance.utilities[0].push_back(total + s[i]);
    r.instance.utilities[1].push_back(total + total / k - s[i]);
    r.instance.item_names.push_back("s:" + std::to_string(i));
    r.back_map.push_back("integer " + std::to_string(s[i]) + " at position " + std::to_string(i));
  }
  return detail::finish(std::move(r));
}

// Exact Regular Set Packing (every set of size d; want k disjoint sets) ->
// Fair with 0/1 utilities and unit costs; threshold 2^(dk).
inline ReductionOutput from_ersp(const SetSystem& sys, std::int64_t d, std::int64_t k) {
  if (sys.universe_size == 0) detail::reject("universe must be non-empty");
  if (sys.sets.empty()) detail::reject("set family must be non-empty");
  if (d < 1 || k < 1) detail::reject("d and k must be >= 1");
  detail::check_sets(sys);
  for (std::size_t i = 0; i < sys.sets.size(); ++i)
    if (static_cast<std::int64_t>(sys.sets[i].size()) != d)
      detail::reject("set " + std::to_string(i) + " does not have size d");

  ReductionOutput r;
  r.reduction = "ersp";
  r.kind = ObjectiveKind::Fair;
  r.threshold = BigInt(1) << static_cast<unsigned>(d * k);
  r.instance.budget = k;
  r.instance.costs.assign(sys.sets.size(), 1);
  r.instance.utilities.assign(sys.universe_size, std::vector<std::int64_t>(sys.sets.size(), 0));
  for (std::size_t j = 0; j < sys.sets.size(); ++j) {
    for (auto e : sys.sets[j]) r.instance.utilities[e][j] = 1;
    r.instance.item_names.push_back("set:" + std::to_string(j));
    r.back_map.push_back("set " + std::to_string(j));
  }
  return detail::finish(std::move(r));
}

// Dominating Set -> Diverse with closed-neighbourhood 0/1 utilities; diverse
// value n means every vertex is dominated.
inline ReductionOutput from_dominating_set(const SourceGraph& g, std::int64_t k) {
  if (g.vertices == 0) detail::reject("graph must have at least one vertex");
  if (k < 1) detail::reject("k must be >= 1");
  detail::check_graph(g);
  const std::size_t n = g.vertices;
  ReductionOutput r;
  r.reduction = "dominating-set";
  r.kind = ObjectiveKind::Diverse;
  r.threshold = static_cast<std::uint64_t>(n);
  r.instance.budget = k;
  r.instance.costs.assign(n, 1);
  r.instance.utilities.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t w = 0; w < n; ++w) r.instance.utilities[w][w] = 1;
  for (auto [u, v] : g.edges) {
    r.instance.utilities[u][v] = 1;
    r.instance.utilities[v][u] = 1;
  }
  for (std::size_t w = 0; w < n; ++w) {
    r.instance.item_names.push_back("vertex:" + std::to_string(w));
    r.back_map.push_back("vertex " + std::to_string(w));
  }
  return detail::finish(std::move(r));
}

// k-Multicoloured Clique -> Fair with unit costs, k*B voters and budget
// B = k + C(k,2). Every item is worth kT in total, so the product reaches
// (T+1)^(kB) only when every voter gets exactly T, i.e. on a multicoloured
// clique (k vertices plus the C(k,2) edges between them).
inline ReductionOutput from_multicolored_clique(const SourceGraph& g, std::int64_t k) {
  if (k < 2) detail::reject("k must be >= 2");
  if (!g.coloring) detail::reject("multicoloured clique needs a vertex colouring");
  detail::check_graph(g);
  const auto& colour = *g.coloring;
  const auto ku = static_cast<std::size_t>(k);
  std::vector<std::vector<std::size_t>> by_colour(ku);
  for (std::size_t v = 0; v < g.vertices; ++v) {
    if (colour[v] >= ku) detail::reject("vertex " + std::to_string(v) + " has a colour outside [0, k)");
    by_colour[colour[v]].push_back(v);
  }
  for (std::size_t c = 0; c < ku; ++c)
    if (by_colour[c].empty()) detail::reject("colour " + std::to_string(c) + " is unused");
  for (auto [u, v] : g.edges)
    if (colour[u] == colour[v])
      detail::reject("edge " + std::to_string(u) + "-" + std::to_string(v) + " joins one colour");

  const std::size_t nv = g.vertices, ne = g.edges.size(), m = nv + ne;
  const auto T = static_cast<std::int64_t>(nv);
  const std::int64_t budget = k + k * (k - 1) / 2;
  // rank[v]: 1-based position of v within its colour class
  std::vector<std::int64_t> rank(nv);
  for (const auto& cls : by_colour)
    for (std::size_t i = 0; i < cls.size(); ++i) rank[cls[i]] = static_cast<std::int64_t>(i) + 1;

  ReductionOutput r;
  r.reduction = "multicolored-clique";
  r.kind = ObjectiveKind::Fair;
  r.threshold = boost::multiprecision::pow(BigInt(T + 1), static_cast<unsigned>(k * budget));
  r.instance.budget = budget;
  r.instance.costs.assign(m, 1);
  auto& U = r.instance.utilities;

  for (std::size_t c = 0; c < ku; ++c) {
    std::vector<std::int64_t> row(m, 0);
    for (auto v : by_colour[c]) row[v] = T;
    U.push_back(std::move(row));
  }
  for (std::size_t c1 = 0; c1 < ku; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < ku; ++c2) {
      std::vector<std::int64_t> row(m, 0);
      for (std::size_t e = 0; e < ne; ++e) {
        const auto [u, v] = g.edges[e];
        if (std::minmax(colour[u], colour[v]) == std::minmax(c1, c2)) row[nv + e] = T;
      }
      for (std::int64_t t = 0; t < k - 2; ++t) U.push_back(row);
    }
  }
  for (std::size_t c1 = 0; c1 < ku; ++c1) {
    for (std::size_t c2 = 0; c2 < ku; ++c2) {
      if (c1 == c2) continue;
      std::vector<std::int64_t> a(m, 0), b(m, 0);
      for (auto v : by_colour[c1]) {
        a[v] = rank[v];
        b[v] = T - rank[v];
      }
      for (std::size_t e = 0; e < ne; ++e) {
        auto [u, v] = g.edges[e];
        if (colour[u] != c1) std::swap(u, v);
        if (colour[u] != c1 || colour[v] != c2) continue;
        a[nv + e] = T - rank[u];
        b[nv + e] = rank[u];
      }
      U.push_back(std::move(a));
      U.push_back(std::move(b));
    }
  }

  for (std::size_t v = 0; v < nv; ++v) {
    r.instance.item_names.push_back("vertex:" + std::to_string(v));
    r.back_map.push_back("vertex " + std::to_string(v) + " (colour " + std::to_string(colour[v]) + ")");
  }
  for (auto [u, v] : g.edges) {
    r.instance.item_names.push_back("edge:" + std::to_string(u) + "-" + std::to_string(v));
    r.back_map.push_back("edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return detail::finish(std::move(r));
}

namespace detail {

inline void check_x3c(const SetSystem& sys) {
  const std::size_t n = sys.universe_size;
  if (n == 0 || n % 3 != 0) reject("X3C universe size must be a positive multiple of 3");
  check_sets(sys);
  std::vector<std::size_t> hits(n, 0);
  for (std::size_t i = 0; i < sys.sets.size(); ++i) {
    if (sys.sets[i].size() != 3) reject("X3C set " + std::to_string(i) + " does not have size 3");
    for (auto e : sys.sets[i]) ++hits[e];
  }
  for (std::size_t e = 0; e < n; ++e)
    if (hits[e] != 3) reject("X3C element " + std::to_string(e) + " is not in exactly 3 sets");
}

}  // namespace detail

// The voter order written down alongside the X3C construction:
// (x1, y1^(1..m), z1^(1..n), x2, y2^(1..m), z2^(1..n)), mapped onto the voter
// layout used by from_x3c. It is not a single-crossing witness in general:
// the y1 voters tie on different item pairs, so the weak-preference blocks
// are not nested.
inline VoterOrder x3c_proof_voter_order(const SetSystem& sys) {
  const std::size_t m = sys.sets.size(), n = sys.universe_size;
  std::vector<std::size_t> p;
  for (std::size_t side = 0; side < 2; ++side) {
    p.push_back(side);
    for (std::size_t i = 0; i < m; ++i) p.push_back(2 + 2 * i + side);
    for (std::size_t e = 0; e < n; ++e) p.push_back(2 + 2 * m + 2 * e + side);
  }
  return VoterOrder(std::move(p));
}

// X3C (|U| = 3k, sets of size 3, every element in exactly 3 sets) -> Fair with
// unit costs and utilities in {0..6}. Set F_i becomes the item pair a_i and
// a_{2m-i+1}; voters come in mirrored pairs (x, y^(i), z^(e)), all weakly
// monotone along the item order, so the identity order is single-peaked.
//
// Voter layout: x1, x2, then y1^(i), y2^(i) for each set, then z1^(e), z2^(e)
// for each element.
inline ReductionOutput from_x3c(const SetSystem& sys) {
  detail::check_x3c(sys);
  const std::size_t m = sys.sets.size(), n = sys.universe_size, k = n / 3;
  const std::size_t width = 2 * m;
  std::vector<std::vector<bool>> member(n, std::vector<bool>(m + 1, false));  // member[e][l], l 1-based
  for (std::size_t l = 0; l < m; ++l)
    for (auto e : sys.sets[l]) member[e][l + 1] = true;

  auto mirror = [&](const std::vector<std::int64_t>& row) {
    return std::vector<std::int64_t>(row.rbegin(), row.rend());
  };

  ReductionOutput r;
  r.reduction = "x3c";
  r.kind = ObjectiveKind::Fair;
  const auto e1 = static_cast<unsigned>(2 + 2 * m), e2 = static_cast<unsigned>(2 * n);
  r.threshold = boost::multiprecision::pow(BigInt(6 * k + 1), e1) *
                boost::multiprecision::pow(BigInt(6 * k + 2), e2);
  r.instance.budget = static_cast<std::int64_t>(2 * k);
  r.instance.costs.assign(width, 1);
  auto& U = r.instance.utilities;

  // Items are a_1..a_2m; column j - 1 holds a_j.
  std::vector<std::int64_t> x1(width);
  for (std::size_t j = 1; j <= width; ++j) x1[j - 1] = j <= m ? 0 : 6;
  U.push_back(x1);
  U.push_back(mirror(x1));

  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<std::int64_t> y1(width);
    for (std::size_t j = 1; j <= width; ++j) y1[j - 1] = j <= i ? 0 : (j < width - i + 1 ? 3 : 6);
    U.push_back(y1);
    U.push_back(mirror(y1));
  }

  for (std::size_t e = 0; e < n; ++e) {
    std::vector<std::int64_t> z1(width);
    for (std::size_t j = 1; j <= m; ++j) {
      std::int64_t up_to = 0, from = 0;
      for (std::size_t l = 1; l <= j; ++l) up_to += member[e][l];
      for (std::size_t l = j; l <= m; ++l) from += member[e][l];
      z1[j - 1] = up_to;               // f_e(a_j)
      z1[width - j] = 3 + from;        // f_e(a_{2m-j+1})
    }
    U.push_back(z1);
    U.push_back(mirror(z1));
  }

  for (std::size_t p = 0; p < width; ++p) {
    const std::size_t set = p < m ? p : width - 1 - p;
    const std::string name = "set:" + std::to_string(set) + (p < m ? "" : "'");
    r.instance.item_names.push_back(name);
    r.back_map.push_back(std::string(p < m ? "first" : "second") + " copy of set " + std::to_string(set));
  }
  r.sp_witness = detail::identity_items(r.instance);
  if (auto proof = x3c_proof_voter_order(sys); verify_single_crossing(r.instance, proof))
    r.sc_witness = proof;
  return detail::finish(std::move(r));
}

// True iff the generated decision answer (brute-force optimum >= threshold)
// agrees with the source answer.
inline bool verify_reduction(const ReductionOutput& r, bool source_is_yes,
                             const SolveOptions& opts = {}) {
  const auto best = brute_force(r.instance, r.kind, opts);
  return (best.value.as_integer() >= r.threshold) == source_is_yes;
}

}  // namespace mak
