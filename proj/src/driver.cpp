#include "tantrix/driver.hpp"

#include <json.hpp>

#include "tantrix/error.hpp"

namespace tantrix {

const char* drive_status_name(DriveStatus s) {
  switch (s) {
    case DriveStatus::kSolved: return "solved";
    case DriveStatus::kExhausted: return "exhausted";
    case DriveStatus::kInfeasible: return "infeasible";
  }
  return "?";
}

std::set<int> guard_cut_lengths(int n, const std::set<int>& cuts) {
  std::set<int> out = cuts;
  out.erase(n);
  return out;
}

namespace {

std::vector<Placement> loop_placements(const Arrangement& arr, const std::vector<int>& loop) {
  std::vector<Placement> out;
  for (int place : loop) {
    const Pose& pose = arr.placements.at(place);
    out.push_back({place, pose.tile, pose.orientation});
  }
  return out;
}

// Adds the cuts for every flaw of the current point; returns their tags.
std::vector<std::string> add_flaw_cuts(TantrixModel& model, const Arrangement& arr, const ValidationReport& rep,
                                       HoleHandling holes) {
  std::vector<std::string> tags;
  auto note_last = [&](bool added) {
    if (added) tags.push_back(model.program().constraints().back().tag);
  };
  const auto& loops = rep.designated_trace.loops;
  for (const auto& loop : loops) {
    if (static_cast<int>(loop.size()) < arr.n) note_last(model.add_subloop_cut(loop_placements(arr, loop)));
  }
  bool need_nogood = false;
  if (!rep.holes.empty()) {
    if (holes == HoleHandling::kNogood) {
      for (const auto& hole : rep.holes) {
        std::set<int> rim;
        for (const auto& cell : hole.cells) {
          for (const auto& d : kLatticeDirections) {
            const int p = arr.board.place_at(cell + d);
            if (p != 0 && arr.placements.count(p)) rim.insert(p);
          }
        }
        note_last(model.add_hole_cut({rim.begin(), rim.end()}, hole.places));
      }
    } else {
      need_nogood = true;
    }
  }
  if (tags.empty()) need_nogood = true;
  if (need_nogood) note_last(model.add_nogood(arr.placement_list()));
  return tags;
}

}  // namespace

DriveResult solve_tantrix(int n, const Board& board, const TileSet& tiles, const DriveConfig& config) {
  if (board.size() <= n) {
    throw BoardTooSmall("board " + board.label() + " needs more than " + std::to_string(n) + " places");
  }
  if (config.max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  ModelOptions opts = config.options;
  opts.cuts = guard_cut_lengths(n, opts.cuts);
  TantrixModel model = build_model(n, board, tiles, opts);

  DriveResult result;
  for (int iter = 1; iter <= config.max_iterations; ++iter) {
    SolverConfig scfg = config.solver;
    if (scfg.priorities.empty()) scfg.priorities = model.branch_priorities();
    const SolveOutcome outcome = solve(model.program(), scfg);
    result.iterations = iter;
    result.nodes += outcome.stats.nodes;
    result.seconds += outcome.stats.seconds;

    nlohmann::ordered_json rec;
    rec["iteration"] = iter;
    rec["solver_status"] = status_name(outcome.status);
    rec["nodes"] = outcome.stats.nodes;
    rec["seconds"] = outcome.stats.seconds;

    if (outcome.status != SolveStatus::kFeasible) {
      result.status = outcome.status == SolveStatus::kInfeasible ? DriveStatus::kInfeasible : DriveStatus::kExhausted;
      rec["status"] = drive_status_name(result.status);
      if (config.progress) config.progress(rec.dump());
      return result;
    }
    Arrangement arr = decode(model.program(), outcome.values, board, n);
    ValidationReport rep = report(arr, tiles);
    rec["loops"] = rep.designated_trace.loops.size();
    rec["holes"] = rep.holes.size();
    result.arrangement = arr;
    result.report = rep;
    if (rep.is_tantrix_solution) {
      result.status = DriveStatus::kSolved;
      rec["status"] = drive_status_name(result.status);
      rec["cuts"] = nlohmann::ordered_json::array();
      if (config.progress) config.progress(rec.dump());
      return result;
    }
    const auto tags = add_flaw_cuts(model, arr, rep, config.holes);
    result.cuts_added.insert(result.cuts_added.end(), tags.begin(), tags.end());
    rec["status"] = "cut";
    rec["cuts"] = tags;
    if (config.progress) config.progress(rec.dump());
  }
  result.status = DriveStatus::kExhausted;
  return result;
}

}  // namespace tantrix
