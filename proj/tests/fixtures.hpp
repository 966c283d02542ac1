#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mak/core.hpp"

namespace fixtures {

// Six voter groups of sizes 300, 200, 100, 1, 1, 1; six item groups A1..A6 of
// `per_group` items each; group-i voters like exactly the A_i items (utility
// 1). Items are laid out group by group.
inline mak::Instance example2(std::vector<std::int64_t> group_costs = {1, 1, 1, 1, 1, 1},
                              std::size_t per_group = 6) {
  const std::vector<std::size_t> sizes = {300, 200, 100, 1, 1, 1};
  mak::Instance in;
  in.budget = 6;
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t k = 0; k < per_group; ++k) {
      in.item_names.push_back("A" + std::to_string(g + 1) + "." + std::to_string(k));
      in.costs.push_back(group_costs[g]);
    }
  for (std::size_t g = 0; g < 6; ++g) {
    std::vector<std::int64_t> row(6 * per_group, 0);
    for (std::size_t k = 0; k < per_group; ++k) row[g * per_group + k] = 1;
    for (std::size_t v = 0; v < sizes[g]; ++v) in.utilities.push_back(row);
  }
  return in;
}

inline std::vector<std::size_t> group_counts(const mak::Knapsack& s, std::size_t per_group = 6) {
  std::vector<std::size_t> counts(6, 0);
  for (auto j : s) ++counts[j / per_group];
  return counts;
}

}  // namespace fixtures
