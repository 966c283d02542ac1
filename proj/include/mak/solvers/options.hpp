#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mak/core.hpp"

namespace mak {

// Resource caps standing in for the unary-encoding assumption of the DPs.
struct SolveOptions {
  std::size_t max_bruteforce_items = 25;
  std::uint64_t max_dp_cells = 100'000'000;
  std::size_t max_fpt_voters = 8;
  std::size_t greedy_seed_size = 3;

  void validate() const {
    if (max_bruteforce_items == 0 || max_dp_cells == 0 || max_fpt_voters == 0 ||
        greedy_seed_size == 0)
      throw PreconditionError("solve options must all be positive");
  }
};

namespace detail {

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// a * b, saturating at uint64 max.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

inline void check_cells(std::uint64_t cells, const SolveOptions& opts, const char* what) {
  if (cells > opts.max_dp_cells)
    throw GuardrailError(std::string(what) + " table needs " + std::to_string(cells) +
                         " cells, cap is " + std::to_string(opts.max_dp_cells));
}

// Voters with identical utility rows, merged.
struct VoterTypes {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> multiplicity;
  std::vector<std::size_t> type_of;  // voter -> type
};

inline VoterTypes voter_types(const Instance& in) {
  VoterTypes t;
  std::map<std::vector<std::int64_t>, std::size_t> index;
  for (const auto& row : in.utilities) {
    auto [it, fresh] = index.try_emplace(row, t.rows.size());
    if (fresh) {
      t.rows.push_back(row);
      t.multiplicity.push_back(0);
    }
    ++t.multiplicity[it->second];
    t.type_of.push_back(it->second);
  }
  return t;
}

inline Solution empty_solution(const Instance& in, ObjectiveKind kind, std::string method) {
  return make_solution(in, kind, Knapsack{}, std::move(method));
}

}  // namespace detail
}  // namespace mak
