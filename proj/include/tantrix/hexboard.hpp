#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tantrix {

// Axial lattice coordinate. Neighbor directions 0..5 run counter-clockwise
// starting at +q; the hexagons are pointy-topped.
struct AxialCoord {
  int q = 0;
  int r = 0;

  friend constexpr auto operator<=>(const AxialCoord&, const AxialCoord&) = default;
  friend constexpr AxialCoord operator+(AxialCoord a, AxialCoord b) { return {a.q + b.q, a.r + b.r}; }
  friend constexpr AxialCoord operator-(AxialCoord a, AxialCoord b) { return {a.q - b.q, a.r - b.r}; }
};

struct AxialHash {
  std::size_t operator()(const AxialCoord& c) const noexcept {
    return std::hash<std::int64_t>{}((static_cast<std::int64_t>(c.q) << 32) ^ static_cast<std::uint32_t>(c.r));
  }
};

inline constexpr std::array<AxialCoord, 6> kLatticeDirections{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

// Hexagonal ring distance from the origin.
int ring_of(AxialCoord c);

// Edge numbers are 1..6 counter-clockwise around a place.
using Edge = int;
constexpr Edge opposite_edge(Edge e) { return ((e + 2) % 6) + 1; }
// Moves `e` by `steps` edges counter-clockwise (negative steps go clockwise).
constexpr Edge shift_edge(Edge e, int steps) { return (((e - 1 + steps) % 6) + 6) % 6 + 1; }

// Lattice neighbor of `c` across edge `e` of a place.
AxialCoord neighbor(AxialCoord c, Edge e);

// Inverse of neighbor(): the edge of `from` that faces `to`, if adjacent.
std::optional<Edge> edge_towards(AxialCoord from, AxialCoord to);

enum class BoardKind { kTypeA, kTypeB };

// Place numbers 1..m along the spiral. Place 1 is the origin; ring r starts
// r-1 cells before the corner r*(+q) and winds counter-clockwise.
AxialCoord spiral_coord(int place);

class Board {
 public:
  BoardKind kind() const { return kind_; }
  int size() const { return static_cast<int>(places_.size()); }
  AxialCoord coord(int place) const { return places_.at(place - 1); }
  // Place number at `c`, or 0 when the cell is not on this board.
  int place_at(AxialCoord c) const;
  // a(j, l): place across edge l of place j, 0 when off the board.
  int adjacent(int place, Edge e) const { return adjacency_[(place - 1) * 6 + (e - 1)]; }
  int ring(int place) const { return ring_of(coord(place)); }
  const std::vector<AxialCoord>& coords() const { return places_; }
  std::string label() const;

 private:
  friend Board make_board(BoardKind kind, int size);
  BoardKind kind_ = BoardKind::kTypeA;
  std::vector<AxialCoord> places_;
  std::vector<int> adjacency_;
  std::unordered_map<AxialCoord, int, AxialHash> index_;
};

bool is_legal_size(BoardKind kind, int size);
Board make_board(BoardKind kind, int size);

// Smallest legal board of `kind` with more than `n` places.
Board smallest_board_above(BoardKind kind, int n);

// "A:19" / "B:12".
Board parse_board_spec(const std::string& spec);
char board_kind_letter(BoardKind kind);

}  // namespace tantrix
