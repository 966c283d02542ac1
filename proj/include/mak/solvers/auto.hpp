#pragma once

#include "mak/core.hpp"
#include "mak/domains.hpp"
#include "mak/solvers/brute_force.hpp"
#include "mak/solvers/diverse_sp.hpp"
#include "mak/solvers/fair_xp.hpp"
#include "mak/solvers/greedy.hpp"
#include "mak/solvers/ib_dp.hpp"
#include "mak/solvers/options.hpp"
#include "mak/solvers/ordered_diverse.hpp"

namespace mak {

// Picks the strongest exact method whose guardrails allow it and falls back to
// the greedy approximation (flagged) when none does. Never throws for a valid
// instance.
inline Solution solve_auto(const Instance& in, ObjectiveKind kind, const SolveOptions& opts = {},
                           const RecognitionOptions& ropts = {}) {
  require_valid(in);
  opts.validate();
  auto attempt = [](auto&& f) -> std::optional<Solution> {
    try {
      return f();
    } catch (const GuardrailError&) {
      return std::nullopt;
    }
  };

  std::optional<Solution> sol;
  switch (kind) {
    case ObjectiveKind::IB:
      sol = attempt([&] { return solve_ib_dp(in, opts); });
      break;
    case ObjectiveKind::Diverse:
      sol = attempt([&]() -> std::optional<Solution> {
        if (auto order = recognize_single_peaked(in, ropts))
          return attempt([&] { return solve_diverse_sp_dp(in, *order, opts); });
        return std::nullopt;
      });
      if (!sol) {
        sol = attempt([&]() -> std::optional<Solution> {
          if (auto order = recognize_single_crossing(in, ropts)) {
            return attempt([&] {
              OrderedDiverseTable table(in, *order, opts);
              return detail::ordered_solution(in, table, "sc-dp");
            });
          }
          return std::nullopt;
        });
      }
      if (!sol) sol = attempt([&] { return solve_diverse_fpt(in, opts); });
      break;
    case ObjectiveKind::Fair:
      sol = attempt([&] { return solve_fair_xp_dp(in, opts); });
      break;
  }
  if (!sol) sol = attempt([&] { return brute_force(in, kind, opts); });
  if (!sol) sol = solve_greedy(in, kind, opts);
  return *sol;
}

}  // namespace mak
