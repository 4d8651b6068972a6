#include "tantrix/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tantrix {

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kFeasible: return "feasible";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kBudgetExhausted: return "budget_exhausted";
  }
  return "?";
}

int SolveOutcome::value(const IntegerProgram& program, const VarRef& ref) const {
  const int id = program.find(ref);
  if (id < 0 || values.empty()) return 0;
  return values[static_cast<std::size_t>(id)];
}

std::vector<std::string> verify_assignment(const IntegerProgram& program, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != program.num_vars()) {
    throw std::invalid_argument("assignment does not cover every column");
  }
  return program.violated(values);
}

namespace {

using i64 = std::int64_t;
constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

// Terms of one row that share a clique (or a lone column when clique < 0).
struct Group {
  int begin = 0;
  int end = 0;
  int clique = -1;
};

struct Row {
  std::vector<int> vars;
  std::vector<i64> coefs;
  std::vector<Group> groups;
  i64 lo = -kInf;
  i64 hi = kInf;
};

struct Child {
  int var = -1;     // column to fix at `value`; -1 means "empty the clique"
  int value = 0;
  int clique = -1;
};

struct Frame {
  std::vector<Child> children;
  std::size_t next = 0;
  std::size_t trail_mark = 0;
};

class Engine {
 public:
  Engine(const IntegerProgram& ip, const SolverConfig& cfg, bool use_cutoff) : ip_(ip), cfg_(cfg) {
    const int n = ip.num_vars();
    lb_.resize(static_cast<std::size_t>(n));
    ub_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      lb_[static_cast<std::size_t>(v)] = ip.lower(v);
      ub_[static_cast<std::size_t>(v)] = ip.upper(v);
    }
    detect_cliques();
    col_rows_.resize(static_cast<std::size_t>(n));
    for (const auto& c : ip.constraints()) {
      add_row(c.terms, c.sense == Sense::kGe || c.sense == Sense::kEq ? c.rhs : -kInf,
              c.sense == Sense::kLe || c.sense == Sense::kEq ? c.rhs : kInf);
    }
    if (use_cutoff && !ip.objective().terms.empty()) {
      cutoff_row_ = static_cast<int>(rows_.size());
      add_row(ip.objective().terms, -kInf, kInf);
    }
    in_queue_.assign(rows_.size(), 0);
    stamp_.assign(static_cast<std::size_t>(n), 0);
    build_order();
    start_ = std::chrono::steady_clock::now();
  }

  // Runs the search, calling `leaf` on every feasible point; `leaf` returns
  // false to stop.
  template <class Leaf>
  void run(Leaf&& leaf) {
    if (!initial_propagate()) return;
    std::vector<Frame> stack;
    if (!push_frame(stack)) {
      ++stats_.nodes;
      if (!leaf(lb_)) return;
      return;
    }
    while (!stack.empty()) {
      Frame& f = stack.back();
      undo(f.trail_mark);
      if (f.next == f.children.size()) {
        stack.pop_back();
        continue;
      }
      const Child child = f.children[f.next++];
      ++stats_.nodes;
      if (out_of_budget()) {
        interrupted_ = true;
        return;
      }
      if (!apply(child) || !propagate()) continue;
      if (!push_frame(stack)) {
        if (!leaf(lb_)) return;
      }
    }
  }

  // New incumbent: later points must be strictly better.
  void tighten_cutoff(i64 objective) {
    if (cutoff_row_ < 0) return;
    Row& r = rows_[static_cast<std::size_t>(cutoff_row_)];
    if (ip_.objective().sense == ObjectiveSense::kMaximize) {
      r.lo = objective + 1;
    } else {
      r.hi = objective - 1;
    }
  }

  bool interrupted() const { return interrupted_; }
  SolveStats& stats() { return stats_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  enum class TrailKind { kBounds, kForced };
  struct TrailEntry {
    TrailKind kind;
    int idx;
    int old_lb;
    int old_ub;
  };

  void detect_cliques() {
    const int n = ip_.num_vars();
    clique_of_.assign(static_cast<std::size_t>(n), -1);
    for (const auto& c : ip_.constraints()) {
      if (c.rhs != 1 || c.sense == Sense::kGe || c.terms.size() < 2) continue;
      bool ok = true;
      for (const auto& t : c.terms) {
        const auto v = static_cast<std::size_t>(t.var);
        if (t.coef != 1 || lb_[v] < 0 || ub_[v] > 1 || clique_of_[v] >= 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const int id = static_cast<int>(cliques_.size());
      cliques_.emplace_back();
      for (const auto& t : c.terms) {
        clique_of_[static_cast<std::size_t>(t.var)] = id;
        cliques_.back().push_back(t.var);
      }
      forced_.push_back(c.sense == Sense::kEq ? 1 : 0);
    }
    free_.assign(cliques_.size(), 0);
    one_.assign(cliques_.size(), -1);
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      for (int v : cliques_[c]) {
        if (ub_[static_cast<std::size_t>(v)] == 1) ++free_[c];
      }
    }
  }

  void add_row(const std::vector<Term>& terms, i64 lo, i64 hi) {
    Row r;
    r.lo = lo;
    r.hi = hi;
    std::vector<Term> sorted = terms;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Term& a, const Term& b) {
      return clique_of_[static_cast<std::size_t>(a.var)] < clique_of_[static_cast<std::size_t>(b.var)];
    });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      r.vars.push_back(sorted[i].var);
      r.coefs.push_back(sorted[i].coef);
      const int c = clique_of_[static_cast<std::size_t>(sorted[i].var)];
      if (c < 0 || r.groups.empty() || r.groups.back().clique != c) {
        r.groups.push_back({static_cast<int>(i), static_cast<int>(i) + 1, c});
      } else {
        r.groups.back().end = static_cast<int>(i) + 1;
      }
      col_rows_[static_cast<std::size_t>(sorted[i].var)].push_back(static_cast<int>(rows_.size()));
    }
    rows_.push_back(std::move(r));
  }

  void build_order() {
    const int n = ip_.num_vars();
    std::vector<int> prio(static_cast<std::size_t>(n), 0);
    if (!cfg_.priorities.empty()) {
      if (static_cast<int>(cfg_.priorities.size()) != n) throw std::invalid_argument("priority vector size mismatch");
      prio = cfg_.priorities;
    }
    const bool maximize = ip_.objective().sense == ObjectiveSense::kMaximize;
    std::vector<i64> pref(static_cast<std::size_t>(n), 0);
    if (cfg_.rule == BranchRule::kObjectiveGuided) {
      for (const auto& t : ip_.objective().terms) pref[static_cast<std::size_t>(t.var)] = maximize ? t.coef : -t.coef;
    }
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      if (prio[ua] != prio[ub]) return prio[ua] > prio[ub];
      return pref[ua] > pref[ub];
    });
    rank_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    pref_ = std::move(pref);
  }

  bool out_of_budget() {
    if (stats_.nodes > cfg_.node_limit) return true;
    if ((stats_.nodes & 255) == 0 && elapsed() > cfg_.time_limit_seconds) return true;
    return false;
  }

  void enqueue_rows_of(int v) {
    for (int r : col_rows_[static_cast<std::size_t>(v)]) {
      if (!in_queue_[static_cast<std::size_t>(r)]) {
        in_queue_[static_cast<std::size_t>(r)] = 1;
        queue_.push_back(r);
      }
    }
  }

  bool set_bounds(int v, int lo, int hi) {
    const auto uv = static_cast<std::size_t>(v);
    lo = std::max(lo, lb_[uv]);
    hi = std::min(hi, ub_[uv]);
    if (lo == lb_[uv] && hi == ub_[uv]) return true;
    if (lo > hi) return false;
    trail_.push_back({TrailKind::kBounds, v, lb_[uv], ub_[uv]});
    const int old_lb = lb_[uv];
    const int old_ub = ub_[uv];
    lb_[uv] = lo;
    ub_[uv] = hi;
    enqueue_rows_of(v);
    const int c = clique_of_[uv];
    if (c < 0) return true;
    const auto uc = static_cast<std::size_t>(c);
    if (old_ub == 1 && hi == 0) --free_[uc];
    if (old_lb == 0 && lo == 1) {
      if (one_[uc] >= 0) return false;
      one_[uc] = v;
    }
    return settle_clique(c);
  }

  bool force_clique(int c) {
    const auto uc = static_cast<std::size_t>(c);
    if (forced_[uc]) return true;
    trail_.push_back({TrailKind::kForced, c, 0, 0});
    forced_[uc] = 1;
    return settle_clique(c);
  }

  bool settle_clique(int c) {
    const auto uc = static_cast<std::size_t>(c);
    if (one_[uc] >= 0) {
      for (int w : cliques_[uc]) {
        if (w != one_[uc] && ub_[static_cast<std::size_t>(w)] == 1 && !set_bounds(w, 0, 0)) return false;
      }
      return true;
    }
    if (!forced_[uc]) return true;
    if (free_[uc] == 0) return false;
    if (free_[uc] == 1) {
      for (int w : cliques_[uc]) {
        if (ub_[static_cast<std::size_t>(w)] == 1) return set_bounds(w, 1, 1);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry e = trail_.back();
      trail_.pop_back();
      if (e.kind == TrailKind::kForced) {
        forced_[static_cast<std::size_t>(e.idx)] = 0;
        continue;
      }
      const auto uv = static_cast<std::size_t>(e.idx);
      const int c = clique_of_[uv];
      if (c >= 0) {
        const auto uc = static_cast<std::size_t>(c);
        if (ub_[uv] == 0 && e.old_ub == 1) ++free_[uc];
        if (lb_[uv] == 1 && e.old_lb == 0) one_[uc] = -1;
      }
      lb_[uv] = e.old_lb;
      ub_[uv] = e.old_ub;
    }
    for (int r : queue_) in_queue_[static_cast<std::size_t>(r)] = 0;
    queue_.clear();
  }

  bool initial_propagate() {
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      for (int v : cliques_[c]) {
        if (lb_[static_cast<std::size_t>(v)] == 1) {
          if (one_[c] >= 0) return false;
          one_[c] = v;
        }
      }
      if (!settle_clique(static_cast<int>(c))) return false;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (!in_queue_[r]) {
        in_queue_[r] = 1;
        queue_.push_back(static_cast<int>(r));
      }
    }
    return propagate();
  }

  bool propagate() {
    if (cutoff_row_ >= 0 && !in_queue_[static_cast<std::size_t>(cutoff_row_)]) {
      in_queue_[static_cast<std::size_t>(cutoff_row_)] = 1;
      queue_.push_back(cutoff_row_);
    }
    std::size_t head = 0;
    while (head < queue_.size()) {
      const int r = queue_[head++];
      in_queue_[static_cast<std::size_t>(r)] = 0;
      ++stats_.propagations;
      if (!propagate_row(r)) {
        for (std::size_t i = head; i < queue_.size(); ++i) in_queue_[static_cast<std::size_t>(queue_[i])] = 0;
        queue_.clear();
        return false;
      }
      if (head > 4096) {
        queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(head));
        head = 0;
      }
    }
    queue_.clear();
    return true;
  }

  struct GroupRange {
    i64 min = 0;
    i64 max = 0;
    bool zero_ok = true;  // clique groups: contribution 0 still possible
    bool fixed = false;
  };

  GroupRange group_range(const Row& row, const Group& g) const {
    GroupRange out;
    if (g.clique < 0) {
      const auto v = static_cast<std::size_t>(row.vars[static_cast<std::size_t>(g.begin)]);
      const i64 a = row.coefs[static_cast<std::size_t>(g.begin)];
      out.min = a > 0 ? a * lb_[v] : a * ub_[v];
      out.max = a > 0 ? a * ub_[v] : a * lb_[v];
      out.fixed = lb_[v] == ub_[v];
      return out;
    }
    const auto uc = static_cast<std::size_t>(g.clique);
    if (one_[uc] >= 0) {
      out.fixed = true;
      for (int i = g.begin; i < g.end; ++i) {
        if (row.vars[static_cast<std::size_t>(i)] == one_[uc]) out.min = out.max = row.coefs[static_cast<std::size_t>(i)];
      }
      return out;
    }
    int in_group = 0;
    out.min = kInf;
    out.max = -kInf;
    for (int i = g.begin; i < g.end; ++i) {
      if (ub_[static_cast<std::size_t>(row.vars[static_cast<std::size_t>(i)])] == 1) {
        ++in_group;
        out.min = std::min(out.min, row.coefs[static_cast<std::size_t>(i)]);
        out.max = std::max(out.max, row.coefs[static_cast<std::size_t>(i)]);
      }
    }
    out.zero_ok = !forced_[uc] || free_[uc] > in_group;
    if (out.zero_ok) {
      out.min = std::min<i64>(out.min, 0);
      out.max = std::max<i64>(out.max, 0);
    }
    out.fixed = in_group == 0;
    return out;
  }

  bool propagate_row(int ri) {
    const Row& row = rows_[static_cast<std::size_t>(ri)];
    ranges_.resize(row.groups.size());
    i64 min_act = 0, max_act = 0, span = 0;
    for (std::size_t gi = 0; gi < row.groups.size(); ++gi) {
      const GroupRange gr = group_range(row, row.groups[gi]);
      if (gr.min > gr.max) return false;
      ranges_[gi] = gr;
      min_act += gr.min;
      max_act += gr.max;
      span = std::max(span, gr.max - gr.min);
    }
    if (min_act > row.hi || max_act < row.lo) return false;
    const bool hi_slack = row.hi >= kInf || row.hi - min_act >= span;
    const bool lo_slack = row.lo <= -kInf || max_act - row.lo >= span;
    if (hi_slack && lo_slack) return true;

    for (std::size_t gi = 0; gi < row.groups.size(); ++gi) {
      const GroupRange& gr = ranges_[gi];
      if (gr.fixed) continue;
      const Group& g = row.groups[gi];
      const i64 cap = row.hi >= kInf ? kInf : row.hi - (min_act - gr.min);    // most this group may add
      const i64 need = row.lo <= -kInf ? -kInf : row.lo - (max_act - gr.max);  // least it must add
      if (g.clique < 0) {
        const int v = row.vars[static_cast<std::size_t>(g.begin)];
        const i64 a = row.coefs[static_cast<std::size_t>(g.begin)];
        i64 lo = lb_[static_cast<std::size_t>(v)], hi = ub_[static_cast<std::size_t>(v)];
        if (a > 0) {
          if (cap < kInf) hi = std::min(hi, floor_div(cap, a));
          if (need > -kInf) lo = std::max(lo, ceil_div(need, a));
        } else {
          if (cap < kInf) lo = std::max(lo, ceil_div(cap, a));
          if (need > -kInf) hi = std::min(hi, floor_div(need, a));
        }
        if (lo > hi) return false;
        if (!set_bounds(v, static_cast<int>(lo), static_cast<int>(hi))) return false;
        continue;
      }
      const int c = g.clique;
      const auto uc = static_cast<std::size_t>(c);
      if (one_[uc] >= 0) continue;  // settled while handling an earlier group
      for (int i = g.begin; i < g.end; ++i) {
        const int v = row.vars[static_cast<std::size_t>(i)];
        const i64 a = row.coefs[static_cast<std::size_t>(i)];
        if (ub_[static_cast<std::size_t>(v)] == 1 && lb_[static_cast<std::size_t>(v)] == 0 && (a > cap || a < need)) {
          if (!set_bounds(v, 0, 0)) return false;
        }
      }
      if (gr.zero_ok && (0 > cap || 0 < need) && one_[uc] < 0) {
        // One of this row's members must be the chosen one.
        ++stamp_gen_;
        for (int i = g.begin; i < g.end; ++i) stamp_[static_cast<std::size_t>(row.vars[static_cast<std::size_t>(i)])] = stamp_gen_;
        for (int w : cliques_[uc]) {
          if (stamp_[static_cast<std::size_t>(w)] != stamp_gen_ && ub_[static_cast<std::size_t>(w)] == 1 &&
              !set_bounds(w, 0, 0)) {
            return false;
          }
        }
        if (!force_clique(c)) return false;
      }
    }
    return true;
  }

  bool apply(const Child& ch) {
    if (ch.var >= 0) return set_bounds(ch.var, ch.value, ch.value);
    for (int w : cliques_[static_cast<std::size_t>(ch.clique)]) {
      if (ub_[static_cast<std::size_t>(w)] == 1 && !set_bounds(w, 0, 0)) return false;
    }
    return true;
  }

  // Pushes a frame for the next branching column; false if all are fixed.
  bool push_frame(std::vector<Frame>& stack) {
    int pick = -1;
    for (int v : order_) {
      if (lb_[static_cast<std::size_t>(v)] < ub_[static_cast<std::size_t>(v)]) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return false;
    Frame f;
    f.trail_mark = trail_.size();
    const int c = clique_of_[static_cast<std::size_t>(pick)];
    if (c >= 0) {
      std::vector<int> members;
      for (int w : cliques_[static_cast<std::size_t>(c)]) {
        if (ub_[static_cast<std::size_t>(w)] == 1) members.push_back(w);
      }
      std::sort(members.begin(), members.end(),
                [&](int a, int b) { return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]; });
      for (int w : members) f.children.push_back({w, 1, -1});
      if (!forced_[static_cast<std::size_t>(c)]) f.children.push_back({-1, 0, c});
    } else {
      const auto up = static_cast<std::size_t>(pick);
      const bool down_first = pref_[up] < 0;
      for (int val = lb_[up]; val <= ub_[up]; ++val) {
        f.children.push_back({pick, down_first ? val : ub_[up] - (val - lb_[up]), -1});
      }
    }
    stack.push_back(std::move(f));
    return true;
  }

  const IntegerProgram& ip_;
  const SolverConfig& cfg_;
  std::vector<int> lb_, ub_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> clique_of_;
  std::vector<std::vector<int>> cliques_;
  std::vector<int> free_;
  std::vector<int> one_;
  std::vector<char> forced_;
  std::vector<TrailEntry> trail_;
  std::vector<int> queue_;
  std::vector<char> in_queue_;
  std::vector<int> stamp_;
  int stamp_gen_ = 0;
  std::vector<GroupRange> ranges_;
  std::vector<int> order_;
  std::vector<int> rank_;
  std::vector<i64> pref_;
  int cutoff_row_ = -1;
  bool interrupted_ = false;
  SolveStats stats_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SolveOutcome solve(const IntegerProgram& program, const SolverConfig& config) {
  Engine engine(program, config, config.optimize);
  SolveOutcome out;
  bool found = false;
  engine.run([&](const std::vector<int>& values) {
    const auto bad = program.violated(values);
    if (!bad.empty()) throw std::logic_error("solver produced an infeasible point: row " + bad.front());
    found = true;
    out.values = values;
    out.objective = program.objective_value(values);
    ++engine.stats().solutions;
    if (!config.optimize) return false;
    engine.tighten_cutoff(out.objective);
    return true;
  });
  out.stats = engine.stats();
  out.stats.seconds = engine.elapsed();
  out.budget_hit = engine.interrupted();
  if (found) {
    out.status = SolveStatus::kFeasible;
    out.proven_optimal = config.optimize && !engine.interrupted();
  } else {
    out.status = engine.interrupted() ? SolveStatus::kBudgetExhausted : SolveStatus::kInfeasible;
  }
  return out;
}

SolveStatus solve_all(const IntegerProgram& program, const SolverConfig& config,
                      const std::function<bool(const std::vector<int>&)>& visit, SolveStats* stats) {
  Engine engine(program, config, false);
  bool found = false;
  engine.run([&](const std::vector<int>& values) {
    found = true;
    ++engine.stats().solutions;
    return visit(values);
  });
  if (stats) {
    *stats = engine.stats();
    stats->seconds = engine.elapsed();
  }
  if (engine.interrupted()) return SolveStatus::kBudgetExhausted;
  return found ? SolveStatus::kFeasible : SolveStatus::kInfeasible;
}

}  // namespace tantrix
