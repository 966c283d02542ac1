#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mak/core.hpp"
#include "mak/solvers/options.hpp"

namespace mak {

// Exhaustive search over feasible subsets. Subsets are visited in
// lexicographic order of their sorted index sequence, so keeping the first
// strictly better (value, cost) realises the full tie-break.
inline Solution brute_force(const Instance& in, ObjectiveKind kind, const SolveOptions& opts = {}) {
  require_valid(in);
  opts.validate();
  const std::size_t m = in.num_items();
  if (m > opts.max_bruteforce_items)
    throw GuardrailError("brute force over " + std::to_string(m) + " items exceeds cap of " +
                         std::to_string(opts.max_bruteforce_items));

  const auto types = detail::voter_types(in);
  const std::size_t r = types.rows.size();

  std::vector<std::size_t> current;
  std::vector<std::int64_t> sums(r, 0);
  std::vector<std::vector<std::int64_t>> best_at(m + 1, std::vector<std::int64_t>(r, 0));
  std::vector<std::int64_t> colsum(m, 0);
  for (std::size_t t = 0; t < r; ++t)
    for (std::size_t j = 0; j < m; ++j) colsum[j] += types.rows[t][j] * types.multiplicity[t];

  std::vector<std::size_t> best_set;
  ObjectiveValue best_value = evaluate(in, kind, Knapsack{});
  std::int64_t best_cost = 0;

  auto current_value = [&](std::int64_t ib, std::size_t depth) {
    switch (kind) {
      case ObjectiveKind::IB: return ObjectiveValue::scalar(kind, ib);
      case ObjectiveKind::Diverse: {
        std::int64_t v = 0;
        for (std::size_t t = 0; t < r; ++t) v += best_at[depth][t] * types.multiplicity[t];
        return ObjectiveValue::scalar(kind, v);
      }
      case ObjectiveKind::Fair: return ObjectiveValue::fair(nash_product(sums, types.multiplicity));
    }
    throw PreconditionError("unknown objective");
  };

  // Recursive extension by items after `from`.
  auto rec = [&](auto&& self, std::size_t from, std::int64_t cost, std::int64_t ib) -> void {
    for (std::size_t j = from; j < m; ++j) {
      if (cost + in.costs[j] > in.budget) continue;
      const std::size_t depth = current.size();
      current.push_back(j);
      for (std::size_t t = 0; t < r; ++t) {
        sums[t] += types.rows[t][j];
        best_at[depth + 1][t] = std::max(best_at[depth][t], types.rows[t][j]);
      }
      const std::int64_t c = cost + in.costs[j];
      const auto v = current_value(ib + colsum[j], depth + 1);
      if (auto cmp = v <=> best_value; cmp > 0 || (cmp == 0 && c < best_cost)) {
        best_value = v;
        best_cost = c;
        best_set = current;
      }
      self(self, j + 1, c, ib + colsum[j]);
      for (std::size_t t = 0; t < r; ++t) sums[t] -= types.rows[t][j];
      current.pop_back();
    }
  };
  rec(rec, 0, 0, 0);

  return make_solution(in, kind, Knapsack(std::move(best_set)), "bruteforce");
}

}  // namespace mak
