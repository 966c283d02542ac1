#pragma once

// Single-peaked (item order) and single-crossing (voter order) profiles.
//
// SP uses the unimodal reading: along the order each voter's utilities rise
// weakly to some maximiser and then fall weakly. Under ties this is the
// permissive form of "u_i(b) >= u_i(a) whenever b lies between a and the peak"
// with the peak taken as any maximiser; a strict-peak reading would reject
// profiles with plateaus around the maximum.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "mak/c1p.hpp"
#include "mak/core.hpp"

namespace mak {

template <class Tag>
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> p) : p_(std::move(p)) {}

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return Permutation(std::move(p));
  }

  bool is_valid(std::size_t n) const {
    if (p_.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto x : p_) {
      if (x >= n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  }

  Permutation reversed() const { return Permutation({p_.rbegin(), p_.rend()}); }

  std::size_t size() const { return p_.size(); }
  std::size_t operator[](std::size_t pos) const { return p_[pos]; }
  const std::vector<std::size_t>& values() const { return p_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> p_;
};

struct ItemOrderTag {};
struct VoterOrderTag {};
// Position -> item index.
using ItemOrder = Permutation<ItemOrderTag>;
// Position -> voter index.
using VoterOrder = Permutation<VoterOrderTag>;

struct RecognitionOptions {
  std::size_t max_rows = 200'000;
};

inline bool verify_single_peaked(const Instance& in, const ItemOrder& order) {
  if (!order.is_valid(in.num_items())) return false;
  for (const auto& row : in.utilities) {
    std::size_t p = 1;
    while (p < order.size() && row[order[p]] >= row[order[p - 1]]) ++p;
    while (p < order.size() && row[order[p]] <= row[order[p - 1]]) ++p;
    if (p < order.size()) return false;
  }
  return true;
}

inline bool verify_single_crossing(const Instance& in, const VoterOrder& order) {
  if (!order.is_valid(in.num_voters())) return false;
  const std::size_t m = in.num_items();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      // Positions of voters with u(b) >= u(a) must be one block.
      int state = 0;  // 0 before block, 1 inside, 2 after
      for (std::size_t p = 0; p < order.size(); ++p) {
        const auto& row = in.utilities[order[p]];
        const bool in_set = row[b] >= row[a];
        if (in_set && state == 2) return false;
        if (in_set) state = 1;
        else if (state == 1) state = 2;
      }
    }
  }
  return true;
}

// Rows are the upper-level sets {j : u_i(j) >= t}; a profile is unimodal
// along an order exactly when all of them are intervals of it.
inline std::optional<ItemOrder> recognize_single_peaked(const Instance& in,
                                                        const RecognitionOptions& opts = {}) {
  require_valid(in);
  const std::size_t m = in.num_items();
  std::size_t rows = 0;
  for (const auto& row : in.utilities) rows += std::set<std::int64_t>(row.begin(), row.end()).size();
  if (rows > opts.max_rows)
    throw GuardrailError("single-peaked recognition needs " + std::to_string(rows) +
                         " rows, cap is " + std::to_string(opts.max_rows));

  BinaryMatrix mat(m);
  for (const auto& row : in.utilities) {
    for (auto t : std::set<std::int64_t>(row.begin(), row.end())) {
      Bits b(m);
      for (std::size_t j = 0; j < m; ++j) b[j] = row[j] >= t;
      mat.add_row(std::move(b));
    }
  }
  auto order = c1p_order(mat);
  if (!order) return std::nullopt;
  ItemOrder result(std::move(*order));
  if (!verify_single_peaked(in, result)) return std::nullopt;
  return result;
}

inline std::optional<VoterOrder> recognize_single_crossing(const Instance& in,
                                                           const RecognitionOptions& opts = {}) {
  require_valid(in);
  const std::size_t n = in.num_voters(), m = in.num_items();
  if (m * m > opts.max_rows)
    throw GuardrailError("single-crossing recognition needs " + std::to_string(m * m) +
                         " rows, cap is " + std::to_string(opts.max_rows));

  BinaryMatrix mat(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      Bits row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = in.utilities[i][b] >= in.utilities[i][a];
      mat.add_row(std::move(row));
    }
  }
  auto order = c1p_order(mat);
  if (!order) return std::nullopt;
  VoterOrder result(std::move(*order));
  if (!verify_single_crossing(in, result)) return std::nullopt;
  return result;
}

}  // namespace mak
