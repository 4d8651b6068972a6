#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tantrix/error.hpp"
#include "tantrix/tiles.hpp"

using namespace tantrix;

namespace {

std::string replace_line(std::string text, const std::string& prefix, const std::string& line) {
  const auto at = text.find(prefix);
  REQUIRE(at != std::string::npos);
  const auto end = text.find('\n', at);
  return text.replace(at, end - at, line);
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("tiles") {
  TEST_CASE("tile 2 strand angles") {
    const TileSpec& t = default_tileset().tile(2);
    CHECK(t.strand(Color::kRed).angle() == 120);
    CHECK(t.strand(Color::kBlue).angle() == 0);
    CHECK(t.strand(Color::kYellow).angle() == 120);
  }

  TEST_CASE("shipped data file and built-in copy agree") {
    const TileSet from_file = load_tileset_file(std::string(TANTRIX_SOURCE_DIR) + "/data/discovery.tiles");
    CHECK(format_tileset(from_file) == format_tileset(default_tileset()));
    CHECK(format_tileset(load_tileset(format_tileset(default_tileset()))) == format_tileset(default_tileset()));
  }

  TEST_CASE("known facts hold and pattern rows agree") {
    CHECK_NOTHROW(check_facts(default_tileset()));
    CHECK(check_pattern_consistency(default_tileset()).empty());
  }

  TEST_CASE("parse errors") {
    const std::string base = default_tileset_text();
    CHECK_THROWS_AS(load_tileset(replace_line(base, "tile 1 ", "tile 1 Y R:1-3 B:3-4 Y:5-6")), ParseError);
    CHECK_THROWS_AS(load_tileset(replace_line(base, "tile 1 ", "tile 1 Y R:1-3 R:2-4 Y:5-6")), ParseError);
    CHECK_THROWS_AS(load_tileset(replace_line(base, "tile 1 ", "tile 1 Y R:1-7 B:2-4 Y:5-6")), ParseError);
    CHECK_THROWS_AS(load_tileset(replace_line(base, "tile 1 ", "tile 1 Q R:1-3 B:2-4 Y:5-6")), ParseError);
    CHECK_THROWS_AS(load_tileset(replace_line(base, "tile 1 ", "tile 1 Y R:1-3 B:2-4")), ParseError);
    CHECK_THROWS_AS(load_tileset(replace_line(base, "tile 10 ", "")), ParseError);
    CHECK_THROWS_AS(load_tileset(base + "tile 3 Y R:4-5 B:1-6 Y:2-3\n"), ParseError);
    CHECK_THROWS_AS(load_tileset_file("/nonexistent/tiles"), ParseError);
  }

  TEST_CASE("fact violations name the fact") {
    const std::string base = default_tileset_text();
    auto fact_of = [](const std::string& text) -> std::string {
      try {
        load_tileset(text);
      } catch (const FactViolation& e) {
        return e.fact();
      }
      return "";
    };
    // Red strand of tile 5 bent to 60 degrees.
    CHECK(fact_of(replace_line(base, "tile 5 ", "tile 5 R R:1-3 B:2-4 Y:5-6")) == "F2");
    CHECK(fact_of(replace_line(base, "tile 2 ", "tile 2 Y R:1-3 B:2-4 Y:5-6")) == "F1");
    CHECK(fact_of(replace_line(base, "tile 7 ", "tile 7 B R:1-2 B:5-6 Y:3-4")) == "F3");
    CHECK(fact_of(replace_line(base, "tile 4 ", "tile 4 B R:2-6 B:1-4 Y:3-5")) == "F4");
  }

  TEST_CASE("pattern checker catches a moved strand") {
    // Same angles, different edges: the facts still hold, the rows do not.
    const std::string text = replace_line(default_tileset_text(), "tile 7 ", "tile 7 B R:2-4 B:5-6 Y:1-3");
    const TileSet moved = load_tileset(text);
    CHECK_FALSE(check_pattern_consistency(moved).empty());
  }

  TEST_CASE("colour codes") {
    for (const auto& t : default_tileset().tiles()) {
      for (Color d : {Color::kRed, Color::kBlue, Color::kYellow}) {
        for (Orientation k = 1; k <= 6; ++k) {
          std::vector<int> codes;
          for (Edge e = 1; e <= 6; ++e) codes.push_back(oriented_color(t, k, e, d));
          std::sort(codes.begin(), codes.end());
          CHECK(codes == std::vector<int>{1, 1, 2, 2, 3, 3});
          for (Edge e = 1; e <= 6; ++e) {
            // One more clockwise turn shows the colour of the next edge round.
            const Orientation next = k % 6 + 1;
            CHECK(oriented_color(t, next, e, d) == oriented_color(t, k, shift_edge(e, 1), d));
          }
        }
        const auto [a, b] = t.oriented_strand(d, 1);
        CHECK(oriented_color(t, 1, a, d) == 3);
        CHECK(oriented_color(t, 1, b, d) == 3);
      }
    }
    CHECK(color_code(Color::kRed, Color::kYellow) == 1);
    CHECK(color_code(Color::kBlue, Color::kYellow) == 2);
    CHECK(color_code(Color::kBlue, Color::kRed) == 1);
    CHECK(color_code(Color::kYellow, Color::kRed) == 2);
  }

  TEST_CASE("tile 2 designated red: two neighbouring edges score 3") {
    const TileSpec& t = default_tileset().tile(2);
    for (Orientation k = 1; k <= 6; ++k) {
      std::vector<Edge> hot;
      for (Edge e = 1; e <= 6; ++e) {
        if (oriented_color(t, k, e, Color::kRed) == 3) hot.push_back(e);
      }
      REQUIRE(hot.size() == 2);
      CHECK(strand_angle(hot[0], hot[1]) == 120);
    }
  }

  TEST_CASE("orientation turns the tile clockwise") {
    const TileSpec& t = default_tileset().tile(2);  // red 2-3 in the base pose
    CHECK(t.oriented_strand(Color::kRed, 1) == std::pair<Edge, Edge>{2, 3});
    CHECK(t.oriented_strand(Color::kRed, 2) == std::pair<Edge, Edge>{1, 2});
    CHECK(t.oriented_strand(Color::kRed, 3) == std::pair<Edge, Edge>{1, 6});
  }

  TEST_CASE("designated colour") {
    const TileSet& ts = default_tileset();
    CHECK(designated_color(ts, 5) == Color::kRed);
    CHECK(designated_color(ts, 14) == Color::kRed);
    CHECK(designated_color(ts, 15) == ts.tile(5).back);
    CHECK(designated_color(ts, 10) == ts.tile(10).back);
    CHECK(designated_color(ts, 20) == ts.tile(10).back);
    CHECK(designated_color(ts, 3) == ts.tile(3).back);
  }

  TEST_CASE("multiplicities follow the tile sequence 1..10,1..10,...") {
    for (int n = 3; n <= 80; ++n) {
      std::vector<int> count(11, 0);
      for (int t = 1; t <= n; ++t) ++count[static_cast<std::size_t>((t - 1) % 10 + 1)];
      for (int i = 1; i <= 10; ++i) CHECK(tile_multiplicity(n, i) == count[static_cast<std::size_t>(i)]);
    }
    CHECK(tile_multiplicity(15, 3) == 2);
    CHECK(tile_multiplicity(15, 8) == 1);
    for (int i = 1; i <= 10; ++i) CHECK(tile_multiplicity(10, i) == 1);
    CHECK(tile_multiplicity(3, 4) == 0);
  }

  TEST_CASE("strand angles") {
    CHECK(strand_angle(1, 2) == 120);
    CHECK(strand_angle(6, 1) == 120);
    CHECK(strand_angle(1, 3) == 60);
    CHECK(strand_angle(5, 1) == 60);
    CHECK(strand_angle(2, 5) == 0);
  }
}
