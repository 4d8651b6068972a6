#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tantrix/model.hpp"

namespace tantrix {

enum class BranchRule {
  kObjectiveGuided,  // among equal priorities, columns the objective likes best first
  kFirstUnfixed,     // among equal priorities, lowest column id first
};

struct SolverConfig {
  double time_limit_seconds = 600.0;
  std::int64_t node_limit = 50'000'000;
  BranchRule rule = BranchRule::kObjectiveGuided;
  std::uint64_t seed = 0;  // reserved for randomized rules
  // Keep searching for strictly better objective values after the first
  // feasible point; the search then ends with a proof of optimality or a
  // budget stop.
  bool optimize = false;
  // Per-column branching priority, higher first. Empty means all equal.
  std::vector<int> priorities;
};

enum class SolveStatus { kFeasible, kInfeasible, kBudgetExhausted };

const char* status_name(SolveStatus s);

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t propagations = 0;  // row visits
  std::int64_t solutions = 0;
  double seconds = 0.0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<int> values;  // per column; filled iff kFeasible
  std::int64_t objective = 0;
  bool proven_optimal = false;  // only meaningful with optimize
  bool budget_hit = false;      // an incumbent may still be present
  SolveStats stats;

  int value(const IntegerProgram& program, const VarRef& ref) const;
};

SolveOutcome solve(const IntegerProgram& program, const SolverConfig& config);

// Visits every feasible assignment in search order; the callback returns
// false to stop early. Objective and optimize are ignored. Returns
// kFeasible/kInfeasible depending on whether anything was found, or
// kBudgetExhausted when a limit cut the enumeration short.
SolveStatus solve_all(const IntegerProgram& program, const SolverConfig& config,
                      const std::function<bool(const std::vector<int>&)>& visit, SolveStats* stats = nullptr);

// Tags of the rows (and "bound:<name>" entries) the assignment violates.
std::vector<std::string> verify_assignment(const IntegerProgram& program, const std::vector<int>& values);

}  // namespace tantrix
