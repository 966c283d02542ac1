// mak: command-line front end for the multiagent knapsack library.
//
// Exit codes: 0 ok, 1 method/precondition failure, 2 parse/validation/usage,
// 3 guardrail, 4 decision "no" (or no domain witness).

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mak/mak.hpp"

namespace {

constexpr int kOk = 0, kMethod = 1, kParse = 2, kGuardrail = 3, kNo = 4;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw mak::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

mak::ObjectiveKind objective_of(const std::string& s) {
  auto k = mak::parse_objective(s);
  if (!k) throw mak::ParseError("unknown objective \"" + s + "\"");
  return *k;
}

mak::BigInt parse_decimal(const std::string& s) {
  if (s.empty() || s.size() > 100000) throw mak::ParseError("threshold must be a decimal integer");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw mak::ParseError("threshold must be a decimal integer");
  return mak::BigInt(s);
}

void need(mak::ObjectiveKind have, mak::ObjectiveKind want, const std::string& method) {
  if (have != want)
    throw mak::PreconditionError("method " + method + " only solves the " +
                                 std::string(mak::to_string(want)) + " objective");
}

mak::Solution run_method(const mak::Instance& in, mak::ObjectiveKind kind, const std::string& method,
                         const mak::SolveOptions& opts) {
  using mak::ObjectiveKind;
  if (method == "auto") return mak::solve_auto(in, kind, opts);
  if (method == "bruteforce") return mak::brute_force(in, kind, opts);
  if (method == "greedy") return mak::solve_greedy(in, kind, opts);
  if (method == "ib-dp") {
    need(kind, ObjectiveKind::IB, method);
    return mak::solve_ib_dp(in, opts);
  }
  if (method == "xp-dp") {
    need(kind, ObjectiveKind::Fair, method);
    return mak::solve_fair_xp_dp(in, opts);
  }
  need(kind, ObjectiveKind::Diverse, method);
  if (method == "sp-dp") {
    auto order = mak::recognize_single_peaked(in);
    if (!order) throw mak::PreconditionError("profile is not single-peaked");
    return mak::solve_diverse_sp_dp(in, *order, opts);
  }
  if (method == "sc-dp") return mak::solve_diverse_sc(in, opts);
  if (method == "fpt") return mak::solve_diverse_fpt(in, opts);
  throw mak::ParseError("unknown method \"" + method + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiagent knapsack solver"};
  app.require_subcommand(1);

  std::string file, objective, method = "auto", threshold, kind, order_file, reduction, params_file,
                                out_file, selection;
  mak::SolveOptions opts;

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--objective", objective, "ib, diverse or fair")->required();
  solve->add_option("--method", method, "Solver to use")
      ->check(CLI::IsMember({"auto", "bruteforce", "ib-dp", "sp-dp", "sc-dp", "fpt", "xp-dp", "greedy"}));
  solve->add_option("--threshold", threshold, "Decision mode: is some knapsack worth at least this?");
  solve->add_option("--max-cells", opts.max_dp_cells, "DP table cap");
  solve->add_option("--max-fpt-voters", opts.max_fpt_voters, "Voter cap for the FPT solver");
  solve->add_option("FILE", file, "Instance document")->required();

  auto* check = app.add_subcommand("check-domain", "Recognise or verify a restricted domain");
  check->add_option("--kind", kind, "sp or sc")->required()->check(CLI::IsMember({"sp", "sc"}));
  check->add_option("--order", order_file, "Order to verify instead of searching for one");
  check->add_option("FILE", file, "Instance document")->required();

  auto* gen = app.add_subcommand("generate", "Build an instance from a hard source problem");
  gen->add_option("--reduction", reduction, "Source problem")
      ->required()
      ->check(CLI::IsMember(mak::reduction_names()));
  gen->add_option("--params", params_file, "Source parameters (JSON)")->required();
  gen->add_option("--out", out_file, "Output document")->required();

  auto* eval = app.add_subcommand("evaluate", "Evaluate a given selection");
  eval->add_option("--objective", objective, "ib, diverse or fair")->required();
  eval->add_option("--selection", selection, "Comma-separated item names")->required();
  eval->add_option("FILE", file, "Instance document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (solve->parsed()) {
      const auto in = mak::parse_instance(read_file(file));
      const auto k = objective_of(objective);
      const auto sol = run_method(in, k, method, opts);
      auto doc = mak::solution_json(in, k, sol);
      int code = kOk;
      if (!threshold.empty()) {
        const bool yes = sol.value.as_integer() >= parse_decimal(threshold);
        doc["threshold"] = threshold;
        doc["decision"] = yes;
        if (!yes) code = kNo;
      }
      std::cout << doc.dump(2) << "\n";
      return code;
    }
    if (check->parsed()) {
      const auto in = mak::parse_instance(read_file(file));
      mak::Json doc;
      doc["kind"] = kind;
      bool found = false;
      if (kind == "sp") {
        std::optional<mak::ItemOrder> order;
        if (!order_file.empty()) {
          auto given = mak::parse_item_order(in, read_file(order_file));
          if (mak::verify_single_peaked(in, given)) order = given;
        } else {
          order = mak::recognize_single_peaked(in);
        }
        found = order.has_value();
        doc["witness"] = found ? mak::item_order_json(in, *order) : mak::Json("none");
      } else {
        std::optional<mak::VoterOrder> order;
        if (!order_file.empty()) {
          auto given = mak::parse_voter_order(in, read_file(order_file));
          if (mak::verify_single_crossing(in, given)) order = given;
        } else {
          order = mak::recognize_single_crossing(in);
        }
        found = order.has_value();
        doc["witness"] = found ? mak::Json(order->values()) : mak::Json("none");
      }
      std::cout << doc.dump(2) << "\n";
      return found ? kOk : kNo;
    }
    if (gen->parsed()) {
      const auto r = mak::generate_reduction(reduction, read_file(params_file));
      std::ofstream out(out_file, std::ios::binary);
      if (!out) throw mak::ParseError("cannot write " + out_file);
      out << mak::reduction_json(r).dump(2) << "\n";
      std::cout << mak::serialize_instance(r.instance).size() << " bytes of instance written to " << out_file
                << " (threshold " << r.threshold.str() << ")\n";
      return kOk;
    }
    if (eval->parsed()) {
      const auto in = mak::parse_instance(read_file(file));
      const auto k = objective_of(objective);
      std::vector<std::string> names;
      std::stringstream ss(selection);
      for (std::string name; std::getline(ss, name, ',');)
        if (!name.empty()) names.push_back(name);
      const auto sol = mak::make_solution(in, k, mak::parse_selection(in, names), "evaluate");
      auto doc = mak::solution_json(in, k, sol);
      doc["feasible"] = mak::is_feasible(in, sol.knapsack);
      std::cout << doc.dump(2) << "\n";
      return kOk;
    }
  } catch (const mak::GuardrailError& e) {
    std::cerr << "guardrail: " << e.what() << "\n";
    return kGuardrail;
  } catch (const mak::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const mak::ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kParse;
  } catch (const mak::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMethod;
  }
  return kOk;
}
