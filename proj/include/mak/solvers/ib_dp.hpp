#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mak/core.hpp"
#include "mak/solvers/options.hpp"

namespace mak {

// Individually-best knapsack by DP over (items, value): cell (j, x) is the
// minimal cost of a subset with IB value at least x. The table runs over item
// suffixes {j, ..., m-1} (the prefix recurrence on reversed labels), so the
// optimum can be rebuilt front to back taking each item whenever an optimal
// completion exists; that yields the lexicographically smallest optimal set.
inline Solution solve_ib_dp(const Instance& in, const SolveOptions& opts = {}) {
  require_valid(in);
  opts.validate();
  const std::size_t m = in.num_items();
  const std::int64_t mass = utility_mass(in);
  detail::check_cells(detail::sat_mul(m, static_cast<std::uint64_t>(mass) + 1), opts, "IB");

  std::vector<std::int64_t> weight(m, 0);
  for (const auto& row : in.utilities)
    for (std::size_t j = 0; j < m; ++j) weight[j] += row[j];

  const std::size_t width = static_cast<std::size_t>(mass) + 1;
  std::vector<std::int64_t> suf((m + 1) * width, detail::kInf);
  auto at = [&](std::size_t j, std::int64_t x) -> std::int64_t& {
    return suf[j * width + static_cast<std::size_t>(x)];
  };
  at(m, 0) = 0;
  for (std::size_t j = m; j-- > 0;) {
    for (std::int64_t x = 0; x <= mass; ++x) {
      const std::int64_t rest = at(j + 1, std::max<std::int64_t>(0, x - weight[j]));
      at(j, x) = std::min(at(j + 1, x), rest >= detail::kInf ? detail::kInf : in.costs[j] + rest);
    }
  }

  std::int64_t x = 0;
  for (std::int64_t v = mass; v >= 0; --v) {
    if (at(0, v) <= in.budget) {
      x = v;
      break;
    }
  }

  std::vector<std::size_t> chosen;
  std::int64_t remaining = at(0, x);
  for (std::size_t j = 0; j < m && remaining > 0; ++j) {
    const std::int64_t x2 = std::max<std::int64_t>(0, x - weight[j]);
    if (in.costs[j] + at(j + 1, x2) == remaining) {
      chosen.push_back(j);
      remaining -= in.costs[j];
      x = x2;
    }
  }
  return make_solution(in, ObjectiveKind::IB, Knapsack(std::move(chosen)), "ib-dp");
}

}  // namespace mak
