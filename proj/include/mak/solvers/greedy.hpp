#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mak/core.hpp"
#include "mak/solvers/options.hpp"

namespace mak {

namespace detail {

// Marginal gain of one item, measured in the objective (log of it for Fair).
// Fair gains are kept as the exact ratio num/den of the new and old products
// restricted to voters the item touches.
struct Gain {
  std::int64_t value = 0;  // IB / Diverse
  BigInt num = 1, den = 1;  // Fair
  bool positive() const { return value > 0 || num > den; }
};

// gain_a / cost_a > gain_b / cost_b ?
inline bool better_ratio(ObjectiveKind kind, const Gain& a, std::int64_t ca, const Gain& b,
                         std::int64_t cb) {
  if (kind != ObjectiveKind::Fair) {
    return static_cast<__int128>(a.value) * cb > static_cast<__int128>(b.value) * ca;
  }
  // log(na/da)/ca > log(nb/db)/cb  <=>  (na/da)^(cb/g) > (nb/db)^(ca/g)
  const std::int64_t g = std::gcd(ca, cb);
  const std::int64_t ea = cb / g, eb = ca / g;
  if (ea + eb > 64) {
    const long double la = log_of(a.num) - log_of(a.den);
    const long double lb = log_of(b.num) - log_of(b.den);
    return la / static_cast<long double>(ca) > lb / static_cast<long double>(cb);
  }
  using boost::multiprecision::pow;
  const auto ua = static_cast<unsigned>(ea), ub = static_cast<unsigned>(eb);
  return pow(a.num, ua) * pow(b.den, ub) > pow(b.num, ub) * pow(a.den, ua);
}

class GreedyState {
 public:
  GreedyState(const Instance& in, ObjectiveKind kind)
      : in_(in), kind_(kind), sums_(in.num_voters(), 0), top_(in.num_voters(), 0) {}

  void add(std::size_t j) {
    for (std::size_t i = 0; i < in_.num_voters(); ++i) {
      sums_[i] += in_.utilities[i][j];
      top_[i] = std::max(top_[i], in_.utilities[i][j]);
    }
    cost_ += in_.costs[j];
    items_.push_back(j);
  }

  Gain gain(std::size_t j) const {
    Gain g;
    for (std::size_t i = 0; i < in_.num_voters(); ++i) {
      const auto u = in_.utilities[i][j];
      switch (kind_) {
        case ObjectiveKind::IB: g.value += u; break;
        case ObjectiveKind::Diverse: g.value += std::max<std::int64_t>(0, u - top_[i]); break;
        case ObjectiveKind::Fair:
          if (u > 0) {
            g.num *= 1 + sums_[i] + u;
            g.den *= 1 + sums_[i];
          }
          break;
      }
    }
    return g;
  }

  std::int64_t cost() const { return cost_; }
  const std::vector<std::size_t>& items() const { return items_; }

 private:
  const Instance& in_;
  ObjectiveKind kind_;
  std::vector<std::int64_t> sums_, top_;
  std::int64_t cost_ = 0;
  std::vector<std::size_t> items_;
};

}  // namespace detail

// Partial-enumeration greedy for monotone submodular objectives under a
// knapsack constraint: every feasible set smaller than the seed size is a
// candidate, and every feasible seed of exactly that size is extended by the
// affordable item of best gain per unit cost until nothing helps. Achieves
// (1 - 1/e) of the optimum for Diverse and for log(Fair); exact for IB with
// uniform costs.
inline Solution solve_greedy(const Instance& in, ObjectiveKind kind, const SolveOptions& opts = {}) {
  require_valid(in);
  opts.validate();
  const std::size_t m = in.num_items();
  const std::size_t seed_size = opts.greedy_seed_size;

  Solution best = detail::empty_solution(in, kind, "greedy-approximate");
  best.approximate = true;
  auto consider = [&](std::vector<std::size_t> items) {
    auto sol = make_solution(in, kind, Knapsack(std::move(items)), "greedy-approximate", true);
    if (preferred(sol, best)) best = std::move(sol);
  };

  auto extend = [&](const std::vector<std::size_t>& seed) {
    detail::GreedyState state(in, kind);
    std::vector<bool> used(m, false);
    for (auto j : seed) {
      state.add(j);
      used[j] = true;
    }
    for (;;) {
      std::size_t pick = m;
      detail::Gain pick_gain;
      for (std::size_t j = 0; j < m; ++j) {
        if (used[j] || state.cost() + in.costs[j] > in.budget) continue;
        auto g = state.gain(j);
        if (!g.positive()) continue;
        if (pick == m || detail::better_ratio(kind, g, in.costs[j], pick_gain, in.costs[pick])) {
          pick = j;
          pick_gain = std::move(g);
        }
      }
      if (pick == m) break;
      state.add(pick);
      used[pick] = true;
    }
    consider(state.items());
  };

  std::vector<std::size_t> seed;
  auto rec = [&](auto&& self, std::size_t from, std::int64_t cost) -> void {
    if (seed.size() == seed_size) {
      extend(seed);
      return;
    }
    consider(seed);
    for (std::size_t j = from; j < m; ++j) {
      if (cost + in.costs[j] > in.budget) continue;
      seed.push_back(j);
      self(self, j + 1, cost + in.costs[j]);
      seed.pop_back();
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace mak
