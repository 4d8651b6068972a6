#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "tantrix/hexboard.hpp"
#include "tantrix/model.hpp"
#include "tantrix/solver.hpp"

using namespace tantrix;

namespace {

using Point = std::vector<int>;

// Every assignment within the column bounds that satisfies all rows.
std::set<Point> brute_force(const IntegerProgram& ip) {
  std::set<Point> out;
  Point v(static_cast<std::size_t>(ip.num_vars()));
  for (int id = 0; id < ip.num_vars(); ++id) v[static_cast<std::size_t>(id)] = ip.lower(id);
  while (true) {
    if (ip.violated(v).empty()) out.insert(v);
    int id = 0;
    for (; id < ip.num_vars(); ++id) {
      auto& x = v[static_cast<std::size_t>(id)];
      if (x < ip.upper(id)) {
        ++x;
        break;
      }
      x = ip.lower(id);
    }
    if (id == ip.num_vars()) break;
  }
  return out;
}

IntegerProgram random_program(std::mt19937& rng) {
  IntegerProgram ip;
  std::uniform_int_distribution<int> coin(0, 1);
  const int n = std::uniform_int_distribution<int>(3, 7)(rng);
  for (int i = 0; i < n; ++i) {
    const bool binary = coin(rng) || i < 3;
    const int lb = binary ? 0 : std::uniform_int_distribution<int>(-1, 1)(rng);
    const int ub = binary ? 1 : lb + std::uniform_int_distribution<int>(1, 3)(rng);
    ip.add_var(VarRef::y(1, i + 1), lb, ub);
  }
  int tag = 0;
  // A set-packing or partitioning row over some binaries.
  if (coin(rng)) {
    LinearConstraint c;
    for (int i = 0; i < n; ++i) {
      if (ip.upper(i) == 1 && ip.lower(i) == 0 && (coin(rng) || i < 2)) c.terms.push_back({1, i});
    }
    c.sense = coin(rng) ? Sense::kEq : Sense::kLe;
    c.rhs = 1;
    c.tag = "R" + std::to_string(tag++);
    ip.add_constraint(c);
  }
  std::uniform_int_distribution<int> coef(-3, 3);
  const int rows = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int r = 0; r < rows; ++r) {
    LinearConstraint c;
    for (int i = 0; i < n; ++i) {
      if (coin(rng)) c.terms.push_back({coef(rng), i});
    }
    c.sense = static_cast<Sense>(std::uniform_int_distribution<int>(0, 2)(rng));
    c.rhs = std::uniform_int_distribution<int>(-2, 4)(rng);
    c.tag = "R" + std::to_string(tag++);
    ip.add_constraint(c);
  }
  Objective obj;
  obj.sense = coin(rng) ? ObjectiveSense::kMaximize : ObjectiveSense::kMinimize;
  for (int i = 0; i < n; ++i) obj.terms.push_back({coef(rng), i});
  ip.set_objective(obj);
  return ip;
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("trivially infeasible") {
    IntegerProgram ip;
    const int a = ip.add_var(VarRef::u(1, 2), 0, 1);
    const int b = ip.add_var(VarRef::u(1, 3), 0, 1);
    ip.add_constraint({{{1, a}, {1, b}}, Sense::kGe, 3, "too_much"});
    const auto out = solve(ip, {});
    CHECK(out.status == SolveStatus::kInfeasible);
    CHECK(out.values.empty());
    CHECK(solve_all(ip, {}, [](const Point&) { return true; }) == SolveStatus::kInfeasible);
  }

  TEST_CASE("random programs agree with brute force") {
    std::mt19937 rng(20240611);
    for (int round = 0; round < 400; ++round) {
      const IntegerProgram ip = random_program(rng);
      const auto all = brute_force(ip);
      for (auto rule : {BranchRule::kObjectiveGuided, BranchRule::kFirstUnfixed}) {
        SolverConfig cfg;
        cfg.rule = rule;
        std::set<Point> seen;
        std::size_t visits = 0;
        const auto st = solve_all(ip, cfg, [&](const Point& v) {
          ++visits;
          seen.insert(v);
          return true;
        });
        CHECK(seen == all);
        CHECK(visits == all.size());
        CHECK(st == (all.empty() ? SolveStatus::kInfeasible : SolveStatus::kFeasible));

        const auto first = solve(ip, cfg);
        CHECK(first.status == (all.empty() ? SolveStatus::kInfeasible : SolveStatus::kFeasible));
        if (first.status == SolveStatus::kFeasible) CHECK(all.count(first.values) == 1);

        cfg.optimize = true;
        const auto best = solve(ip, cfg);
        if (all.empty()) {
          CHECK(best.status == SolveStatus::kInfeasible);
          continue;
        }
        REQUIRE(best.status == SolveStatus::kFeasible);
        CHECK(best.proven_optimal);
        std::int64_t expect = ip.objective_value(*all.begin());
        for (const auto& p : all) {
          const auto v = ip.objective_value(p);
          expect = ip.objective().sense == ObjectiveSense::kMaximize ? std::max(expect, v) : std::min(expect, v);
        }
        CHECK(best.objective == expect);
      }
    }
  }

  TEST_CASE("three tiles on B:3: enumeration matches brute force over placements") {
    const Board board = parse_board_spec("B:3");
    const auto m = build_model(3, board, default_tileset(), {});
    std::vector<std::vector<Placement>> options(4);
    for (int j = 1; j <= 3; ++j) {
      options[static_cast<std::size_t>(j)].push_back({0, 0, 0});
      for (int i = 1; i <= 3; ++i) {
        for (Orientation k = 1; k <= 6; ++k) options[static_cast<std::size_t>(j)].push_back({j, i, k});
      }
    }
    std::set<Point> expect;
    for (const auto& p1 : options[1]) {
      for (const auto& p2 : options[2]) {
        for (const auto& p3 : options[3]) {
          std::vector<Placement> list;
          for (const auto& p : {p1, p2, p3}) {
            if (p.tile) list.push_back(p);
          }
          const auto v = m.encode(list);
          if (verify_assignment(m.program(), v).empty()) expect.insert(v);
        }
      }
    }
    std::set<Point> got;
    solve_all(m.program(), {}, [&](const Point& v) {
      got.insert(v);
      return true;
    });
    CHECK(got == expect);
    CHECK_FALSE(expect.empty());
  }

  TEST_CASE("deterministic") {
    const auto m = build_model(5, parse_board_spec("A:7"), default_tileset(), {});
    SolverConfig cfg;
    cfg.priorities = m.branch_priorities();
    const auto a = solve(m.program(), cfg);
    const auto b = solve(m.program(), cfg);
    REQUIRE(a.status == SolveStatus::kFeasible);
    CHECK(a.values == b.values);
    CHECK(a.stats.nodes == b.stats.nodes);
  }

  TEST_CASE("a no-good moves the solver to another point") {
    auto m = build_model(5, parse_board_spec("A:7"), default_tileset(), {});
    const auto a = solve(m.program(), {});
    REQUIRE(a.status == SolveStatus::kFeasible);
    std::vector<Placement> used;
    for (int id = 0; id < m.program().num_vars(); ++id) {
      const VarRef& r = m.program().var(id);
      if (r.kind == VarKind::kX && a.values[static_cast<std::size_t>(id)] == 1) used.push_back({r.b, r.a, r.c});
    }
    REQUIRE(used.size() == 5);
    m.add_nogood(used);
    const auto b = solve(m.program(), {});
    REQUIRE(b.status == SolveStatus::kFeasible);
    CHECK(b.values != a.values);
    CHECK(verify_assignment(m.program(), b.values).empty());
  }

  TEST_CASE("verify reports the broken rows") {
    const auto m = build_model(5, parse_board_spec("A:7"), default_tileset(), {});
    const auto a = solve(m.program(), {});
    REQUIRE(a.status == SolveStatus::kFeasible);
    auto v = a.values;
    CHECK(verify_assignment(m.program(), v).empty());
    for (int id = 0; id < m.program().num_vars(); ++id) {
      if (m.program().var(id).kind == VarKind::kX && v[static_cast<std::size_t>(id)] == 1) {
        v[static_cast<std::size_t>(id)] = 0;
        break;
      }
    }
    const auto bad = verify_assignment(m.program(), v);
    CHECK(std::find(bad.begin(), bad.end(), "C2") != bad.end());
    CHECK_THROWS_AS(verify_assignment(m.program(), {1, 0}), std::invalid_argument);
  }

  TEST_CASE("budgets stop the search") {
    const auto m = build_model(10, parse_board_spec("B:12"), default_tileset(), {});
    SolverConfig cfg;
    cfg.node_limit = 3;
    const auto out = solve(m.program(), cfg);
    CHECK(out.status == SolveStatus::kBudgetExhausted);
    CHECK(out.budget_hit);
    CHECK(out.stats.nodes <= 4);
    CHECK(solve_all(m.program(), cfg, [](const Point&) { return true; }) == SolveStatus::kBudgetExhausted);
  }
}
