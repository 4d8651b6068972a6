#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "tantrix/hexboard.hpp"
#include "tantrix/tiles.hpp"
#include "tantrix/validate.hpp"

namespace tantrix {

inline constexpr int kOracleMaxTiles = 7;
inline constexpr int kOracleMaxBoard = 12;

// Placements sorted by place; ordered and compared as tuples.
struct CanonicalSolution {
  std::vector<Placement> placements;

  // "place:tile:orientation" items separated by single spaces.
  std::string encoding() const;
  friend auto operator<=>(const CanonicalSolution&, const CanonicalSolution&) = default;
};

// A lattice rotation about the origin followed by a translation that maps
// the board's cell set onto itself.
struct BoardSymmetry {
  int turns = 0;  // counter-clockwise 60 degree steps
  AxialCoord shift;
};

std::vector<BoardSymmetry> board_symmetries(const Board& board);

// Lexicographically smallest image of the placements under the board's
// rotational symmetries. Reflections are left out: they turn tiles into
// their mirror images, which are not in the set.
CanonicalSolution canonical(const Board& board, const std::vector<Placement>& placements);

// Every valid solution (report(...).is_tantrix_solution) of challenge n on the
// board, up to symmetry. Throws InstanceTooLarge beyond the oracle limits.
std::set<CanonicalSolution> enumerate_all(int n, const Board& board, const TileSet& tiles);

// Every closed chain of `length` tiles whose `color` strands join up,
// using at most budget[i-1] copies of tile i. When all_colors is set, every
// shared edge inside the chain must also match in colour. Each loop is
// returned once, placements sorted by place.
std::vector<std::vector<Placement>> enumerate_loops(const Board& board, const TileSet& tiles, Color color, int length,
                                                    const std::array<int, TileSet::kSorts>& budget, bool all_colors);

std::string golden_text(const std::set<CanonicalSolution>& solutions);

}  // namespace tantrix
