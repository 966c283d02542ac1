#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mak/core.hpp"
#include "mak/solvers/options.hpp"

namespace mak {

// Fair knapsack by DP over per-voter utility vectors (XP in the number of
// voters). Cell (z, i) is the minimal cost of a knapsack whose utility vector
// is exactly z and whose last item is i:
//
//   T[z, i] = c(a_i) + min( [z == u(a_i)] * 0,  min_{j < i} T[z - u(a_i), j] )
//
// Items are labelled in reverse so that "last" is the smallest original index;
// the optimum is then rebuilt front to back picking the smallest feasible next
// item, which gives the lexicographically smallest optimal set. Identical
// voters share one coordinate of z; only states with cost <= B are kept.
inline Solution solve_fair_xp_dp(const Instance& in, const SolveOptions& opts = {}) {
  require_valid(in);
  opts.validate();
  const std::size_t m = in.num_items();
  const auto types = detail::voter_types(in);
  const std::size_t r = types.rows.size();

  std::vector<std::uint64_t> stride(r);
  std::uint64_t dims = 1;
  for (std::size_t t = 0; t < r; ++t) {
    std::int64_t total = 0;
    for (auto u : types.rows[t]) total += u;
    stride[t] = dims;
    dims = detail::sat_mul(dims, static_cast<std::uint64_t>(total) + 1);
  }
  detail::check_cells(detail::sat_mul(dims, m), opts, "fair XP");

  std::vector<std::uint64_t> delta(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t t = 0; t < r; ++t)
      delta[j] += static_cast<std::uint64_t>(types.rows[t][j]) * stride[t];

  using StateMap = std::unordered_map<std::uint64_t, std::int64_t>;
  // best[z]: cheapest knapsack with vector z among items > current (plus empty)
  StateMap best{{0, 0}};
  std::vector<StateMap> first(m);  // first[j][z]: smallest original item is j
  for (std::size_t j = m; j-- > 0;) {
    const std::int64_t c = in.costs[j];
    for (const auto& [z, cost] : best)
      if (cost + c <= in.budget) first[j].emplace(z + delta[j], cost + c);
    for (const auto& [z, cost] : first[j]) {
      auto [it, fresh] = best.try_emplace(z, cost);
      if (!fresh && cost < it->second) it->second = cost;
    }
  }

  auto product_of = [&](std::uint64_t z) {
    std::vector<std::int64_t> sums(r);
    for (std::size_t t = r; t-- > 0;) {
      sums[t] = static_cast<std::int64_t>(z / stride[t]);
      z %= stride[t];
    }
    return nash_product(sums, types.multiplicity);
  };

  BigInt top = 1;
  std::int64_t top_cost = 0;
  for (const auto& [z, cost] : best) {
    auto p = product_of(z);
    if (p > top || (p == top && cost < top_cost)) {
      top = std::move(p);
      top_cost = cost;
    }
  }

  std::vector<std::uint64_t> frontier;
  for (const auto& [z, cost] : best)
    if (cost == top_cost && product_of(z) == top) frontier.push_back(z);

  std::vector<std::size_t> chosen;
  std::int64_t remaining = top_cost;
  for (std::size_t j = 0; j < m && remaining > 0; ++j) {
    std::vector<std::uint64_t> next;
    for (auto z : frontier) {
      auto it = first[j].find(z);
      if (it != first[j].end() && it->second == remaining) next.push_back(z - delta[j]);
    }
    if (next.empty()) continue;
    chosen.push_back(j);
    remaining -= in.costs[j];
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return make_solution(in, ObjectiveKind::Fair, Knapsack(std::move(chosen)), "xp-dp");
}

}  // namespace mak
