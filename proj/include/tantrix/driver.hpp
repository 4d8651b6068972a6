#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tantrix/model.hpp"
#include "tantrix/solver.hpp"
#include "tantrix/validate.hpp"

namespace tantrix {

enum class HoleHandling {
  kNogood,     // cut the rim/cavity pattern of each hole
  kRelyOnC6,   // C6 rows do the shaping; a holed point only gets a full no-good
};

struct DriveConfig {
  ModelOptions options;
  int max_iterations = 200;
  SolverConfig solver;  // empty priorities are filled from the model
  HoleHandling holes = HoleHandling::kNogood;
  // Receives one JSON object per iteration.
  std::function<void(const std::string&)> progress;
};

enum class DriveStatus { kSolved, kExhausted, kInfeasible };

const char* drive_status_name(DriveStatus s);

struct DriveResult {
  DriveStatus status = DriveStatus::kExhausted;
  std::optional<Arrangement> arrangement;  // last decoded point, if any
  std::optional<ValidationReport> report;
  int iterations = 0;
  std::vector<std::string> cuts_added;
  std::int64_t nodes = 0;
  double seconds = 0.0;
};

// Drops cut length L == n: a loop through all n tiles is the goal itself.
std::set<int> guard_cut_lengths(int n, const std::set<int>& cuts);

// Throws BoardTooSmall unless board.size() > n.
DriveResult solve_tantrix(int n, const Board& board, const TileSet& tiles, const DriveConfig& config);

}  // namespace tantrix
