#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mak/core.hpp"
#include "mak/domains.hpp"
#include "mak/solvers/options.hpp"

namespace mak {

// Diverse knapsack on a single-peaked profile. Items are relabelled along
// `order`; cell (p, x) is the minimal cost of a subset of positions [0, p]
// that contains p and has diverse value at least x. Appending p after q adds
// exactly sum_l max(0, u_l(p) - u_l(q)) because of single-peakedness.
inline Solution solve_diverse_sp_dp(const Instance& in, const ItemOrder& order,
                                    const SolveOptions& opts = {}) {
  require_valid(in);
  opts.validate();
  if (!verify_single_peaked(in, order))
    throw PreconditionError("profile not single-peaked under given order");
  const std::size_t m = in.num_items();
  const std::int64_t mass = utility_mass(in);
  detail::check_cells(detail::sat_mul(m, static_cast<std::uint64_t>(mass) + 1), opts,
                      "single-peaked diverse");

  std::vector<std::int64_t> colsum(m, 0);
  for (std::size_t p = 0; p < m; ++p)
    for (const auto& row : in.utilities) colsum[p] += row[order[p]];
  // gain[p][q], q < p
  std::vector<std::vector<std::int64_t>> gain(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < p; ++q)
      for (const auto& row : in.utilities)
        gain[p][q] += std::max<std::int64_t>(0, row[order[p]] - row[order[q]]);

  const std::size_t width = static_cast<std::size_t>(mass) + 1;
  std::vector<std::int64_t> table(m * width, detail::kInf);
  std::vector<std::int32_t> parent(m * width, -1);
  auto cell = [&](std::size_t p, std::int64_t x) { return p * width + static_cast<std::size_t>(x); };

  for (std::size_t p = 0; p < m; ++p) {
    const std::int64_t c = in.costs[order[p]];
    for (std::int64_t x = 0; x <= mass; ++x) {
      std::int64_t best = colsum[p] >= x ? c : detail::kInf;
      std::int32_t par = -1;
      if (best >= detail::kInf) {
        for (std::size_t q = 0; q < p; ++q) {
          const std::int64_t prev = table[cell(q, std::max<std::int64_t>(0, x - gain[p][q]))];
          if (prev < detail::kInf && c + prev < best) {
            best = c + prev;
            par = static_cast<std::int32_t>(q);
          }
        }
      }
      table[cell(p, x)] = best;
      parent[cell(p, x)] = par;
    }
  }

  std::int64_t target = 0;
  std::size_t end = m;
  for (std::int64_t x = mass; x > 0 && end == m; --x) {
    std::int64_t cheapest = detail::kInf;
    for (std::size_t p = 0; p < m; ++p) {
      if (table[cell(p, x)] <= in.budget && table[cell(p, x)] < cheapest) {
        cheapest = table[cell(p, x)];
        end = p;
      }
    }
    if (end != m) target = x;
  }
  if (end == m) return detail::empty_solution(in, ObjectiveKind::Diverse, "sp-dp");

  std::vector<std::size_t> chosen;
  std::int64_t x = target;
  for (std::int32_t p = static_cast<std::int32_t>(end); p >= 0;) {
    const auto up = static_cast<std::size_t>(p);
    chosen.push_back(order[up]);
    const std::int32_t q = parent[cell(up, x)];
    if (q >= 0) x = std::max<std::int64_t>(0, x - gain[up][static_cast<std::size_t>(q)]);
    p = q;
  }
  return make_solution(in, ObjectiveKind::Diverse, Knapsack(std::move(chosen)), "sp-dp");
}

}  // namespace mak
