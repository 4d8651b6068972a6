#include "tantrix/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "tantrix/error.hpp"

namespace tantrix {

std::string CanonicalSolution::encoding() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < placements.size(); ++i) {
    if (i) os << ' ';
    os << placements[i].place << ':' << placements[i].tile << ':' << placements[i].orientation;
  }
  return os.str();
}

namespace {

AxialCoord rotate_ccw(AxialCoord c, int turns) {
  for (int t = 0; t < ((turns % 6) + 6) % 6; ++t) c = {-c.r, c.q + c.r};
  return c;
}

}  // namespace

std::vector<BoardSymmetry> board_symmetries(const Board& board) {
  std::vector<BoardSymmetry> out;
  std::vector<AxialCoord> cells = board.coords();
  std::sort(cells.begin(), cells.end());
  for (int turns = 0; turns < 6; ++turns) {
    std::vector<AxialCoord> image;
    for (const auto& c : cells) image.push_back(rotate_ccw(c, turns));
    std::sort(image.begin(), image.end());
    const AxialCoord shift = cells.front() - image.front();
    bool same = true;
    for (std::size_t i = 0; i < cells.size() && same; ++i) same = image[i] + shift == cells[i];
    if (same) out.push_back({turns, shift});
  }
  return out;
}

CanonicalSolution canonical(const Board& board, const std::vector<Placement>& placements) {
  std::optional<CanonicalSolution> best;
  for (const auto& sym : board_symmetries(board)) {
    CanonicalSolution img;
    for (const auto& p : placements) {
      const AxialCoord c = rotate_ccw(board.coord(p.place), sym.turns) + sym.shift;
      // Turning a tile counter-clockwise lowers its orientation number.
      img.placements.push_back({board.place_at(c), p.tile, ((p.orientation - 1 - sym.turns) % 6 + 6) % 6 + 1});
    }
    std::sort(img.placements.begin(), img.placements.end());
    if (!best || img < *best) best = std::move(img);
  }
  return *best;
}

namespace {

struct LoopSearch {
  const Board& board;
  const TileSet& tiles;
  Color color;
  int length;
  std::array<int, TileSet::kSorts> budget;
  bool all_colors;

  std::map<int, Pose> placed;
  int start = 0;
  Edge start_entry = 0;  // edge of the start tile the loop must come back through
  std::set<std::vector<Placement>> found;

  bool colors_fit(int place, const Pose& pose) const {
    if (!all_colors) return true;
    for (Edge e = 1; e <= 6; ++e) {
      const int other = board.adjacent(place, e);
      auto it = other == 0 ? placed.end() : placed.find(other);
      if (it == placed.end()) continue;
      if (tiles.tile(pose.tile).color_at(pose.orientation, e) !=
          tiles.tile(it->second.tile).color_at(it->second.orientation, opposite_edge(e))) {
        return false;
      }
    }
    return true;
  }

  // Places tiles at `place` whose strand enters through `entry`.
  void extend(int place, Edge entry) {
    for (int i = 1; i <= TileSet::kSorts; ++i) {
      if (budget[static_cast<std::size_t>(i - 1)] == 0) continue;
      for (Orientation k = 1; k <= 6; ++k) {
        auto [a, b] = tiles.tile(i).oriented_strand(color, k);
        if (a != entry && b != entry) continue;
        const Pose pose{i, k};
        if (!colors_fit(place, pose)) continue;
        const Edge exit = a == entry ? b : a;
        placed.emplace(place, pose);
        --budget[static_cast<std::size_t>(i - 1)];
        step(place, exit);
        ++budget[static_cast<std::size_t>(i - 1)];
        placed.erase(place);
      }
    }
  }

  void step(int place, Edge exit) {
    const int next = board.adjacent(place, exit);
    if (next == 0) return;
    if (static_cast<int>(placed.size()) == length) {
      if (next == start && opposite_edge(exit) == start_entry) {
        std::vector<Placement> loop;
        for (const auto& [p, pose] : placed) loop.push_back({p, pose.tile, pose.orientation});
        found.insert(std::move(loop));
      }
      return;
    }
    if (next < start || placed.count(next)) return;
    extend(next, opposite_edge(exit));
  }

  void run() {
    for (start = 1; start <= board.size(); ++start) {
      for (int i = 1; i <= TileSet::kSorts; ++i) {
        if (budget[static_cast<std::size_t>(i - 1)] == 0) continue;
        for (Orientation k = 1; k <= 6; ++k) {
          auto [a, b] = tiles.tile(i).oriented_strand(color, k);
          // Walk out through b; the search closes through a. The mirrored
          // walk is the same loop and deduplicates in `found`.
          start_entry = a;
          placed.emplace(start, Pose{i, k});
          --budget[static_cast<std::size_t>(i - 1)];
          step(start, b);
          ++budget[static_cast<std::size_t>(i - 1)];
          placed.erase(start);
        }
      }
    }
  }
};

}  // namespace

std::vector<std::vector<Placement>> enumerate_loops(const Board& board, const TileSet& tiles, Color color, int length,
                                                    const std::array<int, TileSet::kSorts>& budget, bool all_colors) {
  if (length < 1) return {};
  LoopSearch s{board, tiles, color, length, budget, all_colors, {}, 0, 0, {}};
  s.run();
  return {s.found.begin(), s.found.end()};
}

std::set<CanonicalSolution> enumerate_all(int n, const Board& board, const TileSet& tiles) {
  if (n > kOracleMaxTiles || board.size() > kOracleMaxBoard) {
    throw InstanceTooLarge("oracle handles at most " + std::to_string(kOracleMaxTiles) + " tiles on " +
                           std::to_string(kOracleMaxBoard) + " places");
  }
  std::set<CanonicalSolution> out;
  if (n < 3 || board.size() < n) return out;
  std::array<int, TileSet::kSorts> budget{};
  for (int i = 1; i <= TileSet::kSorts; ++i) budget[static_cast<std::size_t>(i - 1)] = tile_multiplicity(n, i);
  for (const auto& loop : enumerate_loops(board, tiles, designated_color(tiles, n), n, budget, true)) {
    const Arrangement arr = Arrangement::from_placements(n, board, loop);
    if (report(arr, tiles).is_tantrix_solution) out.insert(canonical(board, loop));
  }
  return out;
}

std::string golden_text(const std::set<CanonicalSolution>& solutions) {
  std::string out;
  for (const auto& s : solutions) out += s.encoding() + '\n';
  return out;
}

}  // namespace tantrix
