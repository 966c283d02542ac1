#pragma once

// Multiagent knapsack model: instances, knapsacks and the three objectives
//   IB      u(S) = sum_{a in S} sum_i u_i(a)
//   Diverse u(S) = sum_i max_{a in S} u_i(a)          (0 on the empty set)
//   Fair    u(S) = prod_i (1 + sum_{a in S} u_i(a))   (1 on the empty set)

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mak/error.hpp"

namespace mak {

using BigInt = boost::multiprecision::cpp_int;

enum class ObjectiveKind { IB, Diverse, Fair };

inline std::string_view to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::IB: return "ib";
    case ObjectiveKind::Diverse: return "diverse";
    case ObjectiveKind::Fair: return "fair";
  }
  return "?";
}

inline std::optional<ObjectiveKind> parse_objective(std::string_view s) {
  if (s == "ib") return ObjectiveKind::IB;
  if (s == "diverse") return ObjectiveKind::Diverse;
  if (s == "fair") return ObjectiveKind::Fair;
  return std::nullopt;
}

// n voters x m items. utilities[i][j] is what voter i gets from item j.
struct Instance {
  std::vector<std::string> item_names;
  std::vector<std::int64_t> costs;
  std::vector<std::vector<std::int64_t>> utilities;
  std::int64_t budget = 0;

  std::size_t num_voters() const { return utilities.size(); }
  std::size_t num_items() const { return costs.size(); }

  bool operator==(const Instance&) const = default;
};

namespace detail {

inline bool add_overflows(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return __builtin_add_overflow(a, b, &out);
}

}  // namespace detail

// Every violated invariant, with the offending item/voter index. Empty means
// the instance is valid.
inline std::vector<std::string> validate_instance(const Instance& in) {
  std::vector<std::string> v;
  const std::size_t m = in.costs.size();
  if (in.utilities.empty()) v.push_back("instance must have at least one voter");
  if (m == 0) v.push_back("instance must have at least one item");
  if (in.item_names.size() != m) {
    v.push_back("item_names has " + std::to_string(in.item_names.size()) +
                " entries but there are " + std::to_string(m) + " costs");
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (in.costs[j] < 1) v.push_back("cost must be >= 1 at item " + std::to_string(j));
  }
  if (in.budget < 0) v.push_back("budget must be >= 0");

  bool ragged = false;
  for (std::size_t i = 0; i < in.utilities.size(); ++i) {
    if (in.utilities[i].size() != m) ragged = true;
  }
  if (ragged) v.push_back("ragged utility matrix");

  std::int64_t mass = 0;
  bool overflow = false;
  for (std::size_t i = 0; i < in.utilities.size(); ++i) {
    for (std::size_t j = 0; j < in.utilities[i].size(); ++j) {
      const auto u = in.utilities[i][j];
      if (u < 0) {
        v.push_back("utility must be >= 0 at voter " + std::to_string(i) + ", item " +
                    std::to_string(j));
      } else if (!overflow && detail::add_overflows(mass, u, mass)) {
        overflow = true;
      }
    }
  }
  if (overflow) v.push_back("total utility overflows 64-bit integers");

  std::int64_t total_cost = 0;
  for (auto c : in.costs) {
    if (c > 0 && detail::add_overflows(total_cost, c, total_cost)) {
      v.push_back("total cost overflows 64-bit integers");
      break;
    }
  }

  std::set<std::string_view> seen;
  for (std::size_t j = 0; j < in.item_names.size(); ++j) {
    if (!seen.insert(in.item_names[j]).second) {
      v.push_back("duplicate item name '" + in.item_names[j] + "' at item " + std::to_string(j));
    }
  }
  return v;
}

inline void require_valid(const Instance& in) {
  auto v = validate_instance(in);
  if (!v.empty()) throw ValidationError(std::move(v));
}

// Sum of all utilities (the DP value bound). Assumes a valid instance.
inline std::int64_t utility_mass(const Instance& in) {
  std::int64_t s = 0;
  for (const auto& row : in.utilities)
    for (auto u : row) s += u;
  return s;
}

// A set of item indices, kept sorted and duplicate-free.
class Knapsack {
 public:
  Knapsack() = default;
  explicit Knapsack(std::vector<std::size_t> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  Knapsack(std::initializer_list<std::size_t> items)
      : Knapsack(std::vector<std::size_t>(items)) {}

  const std::vector<std::size_t>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(std::size_t j) const {
    return std::binary_search(items_.begin(), items_.end(), j);
  }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const Knapsack&) const = default;
  // Lexicographic order on the sorted index sequence; a proper prefix is smaller.
  auto operator<=>(const Knapsack& o) const { return items_ <=> o.items_; }

 private:
  std::vector<std::size_t> items_;
};

inline void check_indices(const Instance& in, const Knapsack& s) {
  if (!s.empty() && s.items().back() >= in.num_items()) throw PreconditionError("bad item index");
}

inline std::int64_t total_cost(const Instance& in, const Knapsack& s) {
  check_indices(in, s);
  std::int64_t c = 0;
  for (auto j : s) c += in.costs[j];
  return c;
}

inline bool is_feasible(const Instance& in, const Knapsack& s) {
  return total_cost(in, s) <= in.budget;
}

// Per-voter additive utility sum_{a in S} u_i(a).
inline std::vector<std::int64_t> voter_totals(const Instance& in, const Knapsack& s) {
  check_indices(in, s);
  std::vector<std::int64_t> out(in.num_voters(), 0);
  for (std::size_t i = 0; i < in.num_voters(); ++i)
    for (auto j : s) out[i] += in.utilities[i][j];
  return out;
}

// prod_i (1 + sums[i])^mult[i]; mult defaults to all ones.
inline BigInt nash_product(std::span<const std::int64_t> sums,
                           std::span<const std::int64_t> mult = {}) {
  BigInt p = 1;
  std::uint64_t acc = 1;
  auto fold = [&](std::uint64_t f) {
    std::uint64_t next;
    if (__builtin_mul_overflow(acc, f, &next)) {
      p *= acc;
      acc = f;
    } else {
      acc = next;
    }
  };
  for (std::size_t i = 0; i < sums.size(); ++i) {
    const auto f = static_cast<std::uint64_t>(sums[i]) + 1;
    const std::int64_t times = mult.empty() ? 1 : mult[i];
    if (times == 1) {
      fold(f);
    } else if (times > 1) {
      p *= acc;
      acc = 1;
      p *= boost::multiprecision::pow(BigInt(f), static_cast<unsigned>(times));
    }
  }
  p *= acc;
  return p;
}

// Natural log of a positive big integer, to double precision.
inline double log_of(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 1000) return std::log(x.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

// Objective value tagged with its rule. IB/Diverse values are machine
// integers; Fair values are exact products and compare exactly.
class ObjectiveValue {
 public:
  static ObjectiveValue scalar(ObjectiveKind kind, std::int64_t v) {
    if (kind == ObjectiveKind::Fair) throw PreconditionError("fair values are products");
    ObjectiveValue o;
    o.kind_ = kind;
    o.scalar_ = v;
    return o;
  }
  static ObjectiveValue fair(BigInt product) {
    ObjectiveValue o;
    o.kind_ = ObjectiveKind::Fair;
    o.product_ = std::move(product);
    return o;
  }

  ObjectiveKind kind() const { return kind_; }
  bool is_fair() const { return kind_ == ObjectiveKind::Fair; }
  std::int64_t scalar() const {
    if (is_fair()) throw PreconditionError("fair value has no scalar");
    return scalar_;
  }
  const BigInt& product() const {
    if (!is_fair()) throw PreconditionError("not a fair value");
    return product_;
  }
  // Display only.
  double fair_log() const { return log_of(product()); }

  // The value as an exact integer regardless of kind.
  BigInt as_integer() const { return is_fair() ? product_ : BigInt(scalar_); }
  std::string to_string() const { return is_fair() ? product_.str() : std::to_string(scalar_); }

  friend bool operator==(const ObjectiveValue& a, const ObjectiveValue& b) {
    return a.kind_ == b.kind_ && (a.is_fair() ? a.product_ == b.product_ : a.scalar_ == b.scalar_);
  }
  friend std::strong_ordering operator<=>(const ObjectiveValue& a, const ObjectiveValue& b) {
    if (a.kind_ != b.kind_) throw PreconditionError("comparing values of different objectives");
    if (!a.is_fair()) return a.scalar_ <=> b.scalar_;
    if (a.product_ < b.product_) return std::strong_ordering::less;
    if (a.product_ > b.product_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  ObjectiveValue() = default;
  ObjectiveKind kind_ = ObjectiveKind::IB;
  std::int64_t scalar_ = 0;
  BigInt product_ = 1;
};

inline ObjectiveValue evaluate(const Instance& in, ObjectiveKind kind, const Knapsack& s) {
  check_indices(in, s);
  switch (kind) {
    case ObjectiveKind::IB: {
      std::int64_t v = 0;
      for (const auto& row : in.utilities)
        for (auto j : s) v += row[j];
      return ObjectiveValue::scalar(kind, v);
    }
    case ObjectiveKind::Diverse: {
      std::int64_t v = 0;
      for (const auto& row : in.utilities) {
        std::int64_t best = 0;
        for (auto j : s) best = std::max(best, row[j]);
        v += best;
      }
      return ObjectiveValue::scalar(kind, v);
    }
    case ObjectiveKind::Fair: {
      const auto sums = voter_totals(in, s);
      return ObjectiveValue::fair(nash_product(sums));
    }
  }
  throw PreconditionError("unknown objective");
}

struct Solution {
  Knapsack knapsack;
  ObjectiveValue value = ObjectiveValue::scalar(ObjectiveKind::IB, 0);
  std::int64_t total_cost = 0;
  std::vector<std::int64_t> per_voter_utility;
  std::string method;
  bool approximate = false;
};

inline Solution make_solution(const Instance& in, ObjectiveKind kind, Knapsack s,
                              std::string method, bool approximate = false) {
  Solution sol;
  sol.value = evaluate(in, kind, s);
  sol.total_cost = total_cost(in, s);
  sol.per_voter_utility = voter_totals(in, s);
  sol.knapsack = std::move(s);
  sol.method = std::move(method);
  sol.approximate = approximate;
  return sol;
}

// Global tie-break: larger value, then smaller cost, then lexicographically
// smaller index set. True iff (va, ca, ka) is strictly preferred.
inline bool preferred(const ObjectiveValue& va, std::int64_t ca, const Knapsack& ka,
                      const ObjectiveValue& vb, std::int64_t cb, const Knapsack& kb) {
  if (auto c = va <=> vb; c != 0) return c > 0;
  if (ca != cb) return ca < cb;
  return ka < kb;
}

inline bool preferred(const Solution& a, const Solution& b) {
  return preferred(a.value, a.total_cost, a.knapsack, b.value, b.total_cost, b.knapsack);
}

}  // namespace mak
