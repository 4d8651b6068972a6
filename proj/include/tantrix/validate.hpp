#pragma once

#include <map>
#include <string>
#include <vector>

#include "tantrix/hexboard.hpp"
#include "tantrix/model.hpp"
#include "tantrix/tiles.hpp"

namespace tantrix {

struct Pose {
  int tile = 0;
  Orientation orientation = 1;
  friend bool operator==(const Pose&, const Pose&) = default;
};

struct Arrangement {
  int n = 0;
  Board board;
  std::map<int, Pose> placements;  // place -> pose

  std::vector<Placement> placement_list() const;
  // Throws MultipleTilesOnPlace when a place is listed twice.
  static Arrangement from_placements(int n, const Board& board, const std::vector<Placement>& placements);
};

// Reads x columns equal to 1. Throws MultipleTilesOnPlace if two share a place.
Arrangement decode(const IntegerProgram& program, const std::vector<int>& values, const Board& board, int n);

struct DesignatedTrace {
  std::vector<std::vector<int>> loops;  // cyclic place sequences, each starting at its smallest place
  std::vector<std::vector<int>> paths;  // open chains, end to end
  int open_ends = 0;
};

DesignatedTrace trace_designated(const Arrangement& arr, const TileSet& tiles, Color color);

struct Hole {
  std::vector<AxialCoord> cells;
  std::vector<int> places;  // board places among the cells, ascending
};

// Empty regions cut off from the unbounded outside, on the infinite lattice.
std::vector<Hole> find_holes(const Arrangement& arr);

bool check_connected(const Arrangement& arr);

enum class RoundnessRowBasis {
  kOccupied,  // percentage taken over rows holding at least one tile
  kSpanned,   // over every row between the outermost occupied ones
};

bool roundness_official(const Arrangement& arr, RoundnessRowBasis basis = RoundnessRowBasis::kOccupied);

struct ValidationReport {
  int n = 0;
  int placed = 0;
  Color designated = Color::kRed;
  bool color_matching_ok = false;
  std::vector<std::pair<int, Edge>> mismatched_edges;  // (place, edge) with place < neighbour
  bool tile_counts_ok = false;
  DesignatedTrace designated_trace;
  std::vector<Hole> holes;
  bool connected = false;
  bool roundness_ok = false;
  bool is_tantrix_solution = false;
};

ValidationReport report(const Arrangement& arr, const TileSet& tiles,
                        RoundnessRowBasis basis = RoundnessRowBasis::kOccupied);

std::string report_json(const ValidationReport& rep, int indent = 2);

}  // namespace tantrix
