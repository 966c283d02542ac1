#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mak/core.hpp"
#include "mak/domains.hpp"
#include "mak/solvers/options.hpp"

namespace mak {

// DP for diverse knapsacks restricted to connected assignments along a fixed
// voter order. Cell (i, x) bounds the cost of a knapsack whose items cover the
// voters at positions [0, i] in consecutive blocks with summed utility >= x:
//
//   T[0, x] = min{ c(a) : u_0(a) >= x }
//   T[i, x] = min over a of
//               c(a)                                 if u_{0..i}(a) >= x
//               c(a) + min_{j < i} T[j, max(0, x - u_{j+1..i}(a))]
//
// An entry may reuse an item across blocks, so a cell is an upper bound on
// the rebuilt set's cost, and the rebuilt set's true diverse value may
// exceed x.
class OrderedDiverseTable {
 public:
  OrderedDiverseTable(const Instance& in, const VoterOrder& order, const SolveOptions& opts = {})
      : in_(&in), order_(order) {
    require_valid(in);
    opts.validate();
    if (!order.is_valid(in.num_voters())) throw PreconditionError("invalid voter order");
    n_ = in.num_voters();
    m_ = in.num_items();
    mass_ = utility_mass(in);
    detail::check_cells(
        detail::sat_mul(detail::sat_mul(n_, static_cast<std::uint64_t>(mass_) + 1), m_), opts,
        "ordered diverse");
    width_ = static_cast<std::size_t>(mass_) + 1;

    // prefix[i][a] = sum of u(a) over positions [0, i]
    std::vector<std::vector<std::int64_t>> prefix(n_, std::vector<std::int64_t>(m_, 0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t a = 0; a < m_; ++a)
        prefix[i][a] = (i ? prefix[i - 1][a] : 0) + in.utilities[order[i]][a];

    cost_.assign(n_ * width_, detail::kInf);
    item_.assign(n_ * width_, -1);
    from_.assign(n_ * width_, -1);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::int64_t x = 0; x <= mass_; ++x) {
        const std::size_t k = cell(i, x);
        for (std::size_t a = 0; a < m_; ++a) {
          const std::int64_t c = in.costs[a];
          if (c >= cost_[k]) continue;
          if (prefix[i][a] >= x) {
            cost_[k] = c;
            item_[k] = static_cast<std::int32_t>(a);
            from_[k] = -1;
            continue;
          }
          for (std::size_t j = 0; j < i; ++j) {
            const std::int64_t block = prefix[i][a] - prefix[j][a];
            const std::int64_t prev = cost_[cell(j, std::max<std::int64_t>(0, x - block))];
            if (prev < detail::kInf && c + prev < cost_[k]) {
              cost_[k] = c + prev;
              item_[k] = static_cast<std::int32_t>(a);
              from_[k] = static_cast<std::int32_t>(j);
            }
          }
        }
      }
    }
  }

  std::size_t num_voters() const { return n_; }
  std::int64_t value_bound() const { return mass_; }

  // Table entry for voter position i (0-based); kInfinity when unreachable.
  std::int64_t cost(std::size_t i, std::int64_t x) const {
    if (x < 0) x = 0;
    if (x > mass_) return kInfinity;
    return cost_[cell(i, x)];
  }
  std::int64_t final_cost(std::int64_t x) const { return cost(n_ - 1, x); }

  // Largest x whose final entry fits in `budget`.
  std::optional<std::int64_t> best_value(std::int64_t budget) const {
    for (std::int64_t x = mass_; x >= 0; --x)
      if (final_cost(x) <= budget) return x;
    return std::nullopt;
  }

  // Items along the parent chain of the final entry for x (deduplicated).
  Knapsack reconstruct(std::int64_t x) const {
    std::vector<std::size_t> items;
    std::int64_t i = static_cast<std::int64_t>(n_) - 1;
    if (final_cost(x) >= kInfinity) return Knapsack{};
    while (i >= 0) {
      const std::size_t k = cell(static_cast<std::size_t>(i), x);
      const auto a = static_cast<std::size_t>(item_[k]);
      items.push_back(a);
      const std::int32_t j = from_[k];
      if (j < 0) break;
      std::int64_t block = 0;
      for (auto p = static_cast<std::size_t>(j) + 1; p <= static_cast<std::size_t>(i); ++p)
        block += in_->utilities[order_[p]][a];
      x = std::max<std::int64_t>(0, x - block);
      i = j;
    }
    return Knapsack(std::move(items));
  }

  static constexpr std::int64_t kInfinity = detail::kInf;

 private:
  std::size_t cell(std::size_t i, std::int64_t x) const {
    return i * width_ + static_cast<std::size_t>(x);
  }

  const Instance* in_;
  VoterOrder order_;
  std::size_t n_ = 0, m_ = 0, width_ = 0;
  std::int64_t mass_ = 0;
  std::vector<std::int64_t> cost_;
  std::vector<std::int32_t> item_, from_;
};

namespace detail {

inline Solution ordered_solution(const Instance& in, const OrderedDiverseTable& table,
                                 std::string method) {
  const auto x = table.best_value(in.budget);
  if (!x || *x == 0) return empty_solution(in, ObjectiveKind::Diverse, std::move(method));
  return make_solution(in, ObjectiveKind::Diverse, table.reconstruct(*x), std::move(method));
}

}  // namespace detail

inline Solution solve_ordered_diverse_dp(const Instance& in, const VoterOrder& order,
                                         const SolveOptions& opts = {}) {
  OrderedDiverseTable table(in, order, opts);
  return detail::ordered_solution(in, table, "ordered-dp");
}

// Diverse knapsack on a single-crossing profile: the ordered DP under a
// single-crossing voter order is exact.
inline Solution solve_diverse_sc(const Instance& in, const SolveOptions& opts = {},
                                 const RecognitionOptions& ropts = {}) {
  auto order = recognize_single_crossing(in, ropts);
  if (!order) throw PreconditionError("profile not single-crossing");
  OrderedDiverseTable table(in, *order, opts);
  return detail::ordered_solution(in, table, "sc-dp");
}

// Diverse knapsack for few voters: the ordered DP over every voter order.
// Voters with identical rows are interchangeable, so only distinct orders of
// the voter types are tried.
inline Solution solve_diverse_fpt(const Instance& in, const SolveOptions& opts = {}) {
  require_valid(in);
  opts.validate();
  const std::size_t n = in.num_voters();
  if (n > opts.max_fpt_voters)
    throw GuardrailError(std::to_string(n) + " voters exceeds the FPT cap of " +
                         std::to_string(opts.max_fpt_voters));

  const auto types = detail::voter_types(in);
  std::vector<std::vector<std::size_t>> members(types.rows.size());
  for (std::size_t v = 0; v < n; ++v) members[types.type_of[v]].push_back(v);
  std::vector<std::size_t> labels;
  for (std::size_t t = 0; t < members.size(); ++t)
    labels.insert(labels.end(), members[t].size(), t);

  Solution best = detail::empty_solution(in, ObjectiveKind::Diverse, "fpt");
  do {
    std::vector<std::size_t> next(members.size(), 0), order;
    for (auto t : labels) order.push_back(members[t][next[t]++]);
    OrderedDiverseTable table(in, VoterOrder(std::move(order)), opts);
    auto sol = detail::ordered_solution(in, table, "fpt");
    if (preferred(sol, best)) best = std::move(sol);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

}  // namespace mak
