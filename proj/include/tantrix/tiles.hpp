#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tantrix/hexboard.hpp"

namespace tantrix {

enum class Color { kRed, kBlue, kYellow };

char color_letter(Color c);
Color parse_color(char c);
const char* color_name(Color c);

// Angle of a strand joining edges a and b: 120 for neighbouring edges, 60 for
// edges two apart, 0 for opposite edges.
int strand_angle(Edge a, Edge b);

struct Strand {
  Edge a = 1;
  Edge b = 2;
  Color color = Color::kRed;

  int angle() const { return strand_angle(a, b); }
  bool covers(Edge e) const { return a == e || b == e; }
  Edge other_end(Edge e) const { return e == a ? b : a; }
};

// Orientation k in 1..6. Orientation 1 is the base pose stored in the
// tileset; each step rotates the tile 60 degrees clockwise, so the strand end
// at base edge e sits on edge e-(k-1).
using Orientation = int;

struct TileSpec {
  int number = 0;
  Color back = Color::kRed;
  std::array<Strand, 3> strands{};

  const Strand& strand(Color c) const;
  // Color on edge `e` of the tile placed with orientation `k`.
  Color color_at(Orientation k, Edge e) const;
  // Edges of the strand of color `c` with orientation `k`, smaller edge first.
  std::pair<Edge, Edge> oriented_strand(Color c, Orientation k) const;
};

class TileSet {
 public:
  static constexpr int kSorts = 10;

  TileSet() = default;
  explicit TileSet(std::array<TileSpec, kSorts> tiles) : tiles_(tiles) {}

  const TileSpec& tile(int number) const { return tiles_.at(static_cast<std::size_t>(number - 1)); }
  const std::array<TileSpec, kSorts>& tiles() const { return tiles_; }

 private:
  std::array<TileSpec, kSorts> tiles_{};
};

// Parses the line format
//   tile <num> <back> <color>:<e1>-<e2> <color>:<e1>-<e2> <color>:<e1>-<e2>
// and checks the known facts (see check_facts). Throws ParseError or
// FactViolation.
TileSet load_tileset(std::string_view text);
TileSet load_tileset_file(const std::string& path);
std::string format_tileset(const TileSet& set);

// The shipped Tantrix Discovery tileset (same content as data/discovery.tiles).
const std::string& default_tileset_text();
const TileSet& default_tileset();

// Throws FactViolation("F1".."F4") if a known fact about the Discovery tiles
// does not hold.
void check_facts(const TileSet& set);

// Each hand-written red pattern row lists oriented placements that must carry
// the red strand on a given edge pair. Returns one message per disagreement.
std::vector<std::string> check_pattern_consistency(const TileSet& set);

// A tile put on a place with an orientation.
struct Placement {
  int place = 0;
  int tile = 0;
  Orientation orientation = 1;

  friend auto operator<=>(const Placement&, const Placement&) = default;
};

// c(i,k,l): 3 for the designated color, 1 and 2 for the other two colors in
// red < blue < yellow order.
int oriented_color(const TileSpec& tile, Orientation k, Edge e, Color designated);
int color_code(Color c, Color designated);

// Back color of the tile numbered by the lowest digit of n (digit 0 is tile 10).
Color designated_color(const TileSet& set, int n);

// ceil((n+1-i)/10), clamped at 0.
int tile_multiplicity(int n, int tile);

}  // namespace tantrix
