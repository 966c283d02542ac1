#pragma once

// Consecutive-ones property.
//
// Rows are grouped into overlap components (two rows overlap when they
// intersect and neither contains the other). Inside one component the column
// classes are forced up to reversal, so they are built incrementally, one row
// at a time in BFS order. Unions of distinct components are either disjoint or
// one sits inside a single class of the other, which gives a containment
// forest; any arrangement of siblings is valid, and we sort them by smallest
// column for determinism.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "mak/error.hpp"

namespace mak {

using Bits = boost::dynamic_bitset<>;

class BinaryMatrix {
 public:
  explicit BinaryMatrix(std::size_t cols) : cols_(cols) {}

  // Rows given as strings of '0'/'1', leftmost character is column 0.
  static BinaryMatrix from_strings(std::initializer_list<std::string_view> rows) {
    if (rows.size() == 0) throw PreconditionError("from_strings needs at least one row");
    BinaryMatrix m(rows.begin()->size());
    for (auto r : rows) {
      Bits b(r.size());
      for (std::size_t c = 0; c < r.size(); ++c) b[c] = r[c] == '1';
      m.add_row(std::move(b));
    }
    return m;
  }

  void add_row(Bits row) {
    if (row.size() != cols_) throw PreconditionError("row width does not match matrix");
    rows_.push_back(std::move(row));
  }
  void add_row(const std::vector<std::size_t>& ones) {
    Bits b(cols_);
    for (auto c : ones) {
      if (c >= cols_) throw PreconditionError("column out of range");
      b.set(c);
    }
    rows_.push_back(std::move(b));
  }

  std::size_t cols() const { return cols_; }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<Bits>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<Bits> rows_;
};

// True iff every row's ones are contiguous under `order` (a column permutation).
inline bool has_consecutive_ones(const BinaryMatrix& m, const std::vector<std::size_t>& order) {
  for (const auto& row : m.rows()) {
    std::size_t first = order.size(), last = 0, count = 0;
    for (std::size_t p = 0; p < order.size(); ++p) {
      if (row[order[p]]) {
        first = std::min(first, p);
        last = p;
        ++count;
      }
    }
    if (count > 0 && last - first + 1 != count) return false;
  }
  return true;
}

namespace detail {

inline bool overlaps(const Bits& a, const Bits& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

inline std::size_t min_col(const Bits& b) { return b.find_first(); }

struct Component;

struct Slot {
  Bits cols;
  std::vector<std::size_t> children;  // indices into the component table
};

struct Component {
  Bits cols;                // union of the component's rows
  std::vector<Slot> classes;  // left-to-right
};

// Inserts `row` into an ordered partition. Returns false when no arrangement
// of the classes admits the row.
inline bool place_row(std::vector<Bits>& classes, Bits& uni, const Bits& row) {
  const Bits fresh = row - uni;
  std::size_t lo = classes.size(), hi = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].intersects(row)) {
      lo = std::min(lo, k);
      hi = k;
    }
  }
  if (lo == classes.size()) return false;
  for (std::size_t k = lo + 1; k < hi; ++k)
    if (!classes[k].is_subset_of(row)) return false;
  for (std::size_t k = lo; k <= hi; ++k)
    if (!classes[k].intersects(row)) return false;

  // Split class k into (a, b), dropping empty halves.
  auto split = [&](std::size_t k, const Bits& a, const Bits& b) {
    std::vector<Bits> parts;
    if (a.any()) parts.push_back(a);
    if (b.any()) parts.push_back(b);
    classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(k));
    classes.insert(classes.begin() + static_cast<std::ptrdiff_t>(k), parts.begin(), parts.end());
    return parts.size();
  };

  const std::size_t last = classes.size() - 1;
  if (fresh.none()) {
    if (lo == hi) return false;
    // Right end first so `lo` stays valid.
    split(hi, classes[hi] & row, classes[hi] - row);
    split(lo, classes[lo] - row, classes[lo] & row);
  } else {
    const bool right = hi == last && (lo == hi || classes[hi].is_subset_of(row));
    const bool left = lo == 0 && (lo == hi || classes[lo].is_subset_of(row));
    if (right) {
      split(lo, classes[lo] - row, classes[lo] & row);
      classes.push_back(fresh);
    } else if (left) {
      split(hi, classes[hi] & row, classes[hi] - row);
      classes.insert(classes.begin(), fresh);
    } else {
      return false;
    }
  }
  uni |= row;
  return true;
}

inline void layout(const std::vector<Component>& comps, const Slot& slot,
                   std::vector<std::size_t>& out);

inline void layout_component(const std::vector<Component>& comps, const Component& c,
                             std::vector<std::size_t>& out) {
  const bool flip = min_col(c.classes.back().cols) < min_col(c.classes.front().cols);
  if (!flip) {
    for (const auto& s : c.classes) layout(comps, s, out);
  } else {
    for (auto it = c.classes.rbegin(); it != c.classes.rend(); ++it) layout(comps, *it, out);
  }
}

inline void layout(const std::vector<Component>& comps, const Slot& slot,
                   std::vector<std::size_t>& out) {
  // Blocks: free columns and child components, ordered by smallest column.
  struct Block {
    std::size_t key;
    std::optional<std::size_t> child;
  };
  Bits free = slot.cols;
  std::vector<Block> blocks;
  for (auto ci : slot.children) {
    free -= comps[ci].cols;
    blocks.push_back({min_col(comps[ci].cols), ci});
  }
  for (auto c = free.find_first(); c != Bits::npos; c = free.find_next(c))
    blocks.push_back({c, std::nullopt});
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.key < b.key; });
  for (const auto& b : blocks) {
    if (b.child) {
      layout_component(comps, comps[*b.child], out);
    } else {
      out.push_back(b.key);
    }
  }
}

}  // namespace detail

// A column permutation under which every row's ones are contiguous, or
// nullopt if none exists. Deterministic; the all-zero matrix maps to the
// identity.
inline std::optional<std::vector<std::size_t>> c1p_order(const BinaryMatrix& m) {
  using namespace detail;
  const std::size_t n = m.cols();

  // Rows with at most one 1, or all ones, constrain nothing.
  std::vector<Bits> rows;
  for (const auto& r : m.rows()) {
    const auto cnt = r.count();
    if (cnt > 1 && cnt < n) rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  // Overlap components, each built as an ordered partition.
  std::vector<Component> comps;
  std::vector<bool> done(rows.size(), false);
  for (std::size_t seed = 0; seed < rows.size(); ++seed) {
    if (done[seed]) continue;
    std::vector<Bits> classes{rows[seed]};
    Bits uni = rows[seed];
    done[seed] = true;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      const auto cur = queue.front();
      queue.pop_front();
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (done[r] || !overlaps(rows[cur], rows[r])) continue;
        done[r] = true;
        if (!place_row(classes, uni, rows[r])) return std::nullopt;
        queue.push_back(r);
      }
    }
    Component c;
    c.cols = uni;
    for (auto& cl : classes) c.classes.push_back(Slot{std::move(cl), {}});
    comps.push_back(std::move(c));
  }

  // Parents before children: larger unions first, and on equal unions the
  // single-row component first (it is one class containing the other).
  std::vector<std::size_t> idx(comps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto ca = comps[a].cols.count(), cb = comps[b].cols.count();
    if (ca != cb) return ca > cb;
    return comps[a].classes.size() < comps[b].classes.size();
  });

  Slot root{Bits(n), {}};
  root.cols.set();
  for (auto ci : idx) {
    const Bits& u = comps[ci].cols;
    Slot* slot = &root;
    for (;;) {
      Slot* next = nullptr;
      for (auto child : slot->children) {
        if (!comps[child].cols.intersects(u)) continue;
        for (auto& cl : comps[child].classes) {
          if (u.is_subset_of(cl.cols)) next = &cl;
        }
        if (next == nullptr) return std::nullopt;
        break;
      }
      if (next == nullptr) break;
      slot = next;
    }
    slot->children.push_back(ci);
  }

  std::vector<std::size_t> order;
  order.reserve(n);
  layout(comps, root, order);
  if (order.size() != n || !has_consecutive_ones(m, order)) return std::nullopt;
  return order;
}

}  // namespace mak
