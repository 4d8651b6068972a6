#include <doctest.h>

#include <json.hpp>

#include <deque>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "tantrix/error.hpp"
#include "tantrix/model.hpp"
#include "tantrix/solver.hpp"
#include "tantrix/validate.hpp"

using namespace tantrix;

namespace {

const TileSet& ts() { return default_tileset(); }

// Empty cells that cannot walk out past a ring well beyond every tile.
std::set<AxialCoord> enclosed_cells(const Arrangement& arr) {
  std::set<AxialCoord> filled;
  int far = 0;
  for (const auto& [place, pose] : arr.placements) {
    filled.insert(arr.board.coord(place));
    far = std::max(far, ring_of(arr.board.coord(place)));
  }
  far += 2;
  std::set<AxialCoord> out;
  for (int q = -far; q <= far; ++q) {
    for (int r = -far; r <= far; ++r) {
      const AxialCoord c{q, r};
      if (ring_of(c) >= far - 1 || filled.count(c)) continue;
      std::set<AxialCoord> seen{c};
      std::deque<AxialCoord> todo{c};
      bool escaped = false;
      while (!todo.empty() && !escaped) {
        const AxialCoord cur = todo.front();
        todo.pop_front();
        for (const auto& d : kLatticeDirections) {
          const AxialCoord nb = cur + d;
          if (filled.count(nb) || seen.count(nb)) continue;
          if (ring_of(nb) >= far) {
            escaped = true;
            break;
          }
          seen.insert(nb);
          todo.push_back(nb);
        }
      }
      if (!escaped) out.insert(c);
    }
  }
  return out;
}

Arrangement random_arrangement(std::mt19937& rng, const Board& board, int count) {
  std::vector<int> places(static_cast<std::size_t>(board.size()));
  for (int j = 0; j < board.size(); ++j) places[static_cast<std::size_t>(j)] = j + 1;
  std::shuffle(places.begin(), places.end(), rng);
  std::vector<Placement> list;
  std::uniform_int_distribution<int> tile(1, 10), orient(1, 6);
  for (int i = 0; i < count; ++i) list.push_back({places[static_cast<std::size_t>(i)], tile(rng), orient(rng)});
  return Arrangement::from_placements(count, board, list);
}

}  // namespace

TEST_SUITE("validate") {
  TEST_CASE("valid five-loop") {
    const auto arr = fixtures::arrangement(5, "A:7", fixtures::five_loop());
    const auto rep = report(arr, ts());
    CHECK(rep.is_tantrix_solution);
    CHECK(rep.color_matching_ok);
    CHECK(rep.tile_counts_ok);
    REQUIRE(rep.designated_trace.loops.size() == 1);
    CHECK(rep.designated_trace.loops[0].size() == 5);
    CHECK(rep.designated_trace.loops[0].front() == 1);
    CHECK(rep.designated_trace.open_ends == 0);
    CHECK(rep.holes.empty());
    CHECK(rep.connected);
    CHECK(rep.designated == Color::kRed);
  }

  TEST_CASE("loop around a hole") {
    const auto arr = fixtures::arrangement(10, "A:19", fixtures::loop_around_hole());
    const auto rep = report(arr, ts());
    CHECK_FALSE(rep.is_tantrix_solution);
    CHECK(rep.color_matching_ok);
    REQUIRE(rep.designated_trace.loops.size() == 1);
    CHECK(rep.designated_trace.loops[0].size() == 10);
    REQUIRE(rep.holes.size() == 1);
    CHECK(rep.holes[0].places == std::vector<int>{7});
    CHECK(rep.holes[0].cells.size() == 1);
    // A single-cell hole has all six neighbours filled.
    for (Edge e = 1; e <= 6; ++e) CHECK(arr.placements.count(arr.board.adjacent(7, e)) == 1);
  }

  TEST_CASE("open lines") {
    const auto arr = fixtures::arrangement(5, "A:7", fixtures::open_lines());
    const auto rep = report(arr, ts());
    CHECK_FALSE(rep.is_tantrix_solution);
    CHECK(rep.color_matching_ok);
    CHECK(rep.designated_trace.loops.empty());
    CHECK(rep.designated_trace.open_ends > 0);
    CHECK(rep.holes.empty());
  }

  TEST_CASE("single tile and disconnected pairs") {
    const auto one = fixtures::arrangement(1, "A:7", {{1, 1, 1}});
    const auto tr = trace_designated(one, ts(), Color::kRed);
    CHECK(tr.loops.empty());
    CHECK(tr.open_ends == 2);
    REQUIRE(tr.paths.size() == 1);
    CHECK(tr.paths[0] == std::vector<int>{1});
    CHECK(check_connected(one));
    CHECK(roundness_official(one));

    const auto apart = fixtures::arrangement(2, "A:19", {{2, 1, 1}, {5, 2, 1}});
    CHECK_FALSE(check_connected(apart));
    CHECK(check_connected(fixtures::arrangement(2, "A:7", {{1, 1, 1}, {2, 2, 1}})));
  }

  TEST_CASE("empty arrangement") {
    const auto arr = fixtures::arrangement(0, "A:7", {});
    const auto rep = report(arr, ts());
    CHECK_FALSE(rep.is_tantrix_solution);
    CHECK(rep.placed == 0);
    CHECK(rep.holes.empty());
  }

  TEST_CASE("wrong tile counts are rejected") {
    auto list = fixtures::five_loop();
    const auto rep = report(fixtures::arrangement(6, "A:7", list), ts());
    CHECK_FALSE(rep.tile_counts_ok);
    CHECK_FALSE(rep.is_tantrix_solution);
  }

  TEST_CASE("colour mismatches are listed") {
    auto list = fixtures::five_loop();
    list[0].orientation = list[0].orientation % 6 + 1;
    const auto rep = report(fixtures::arrangement(5, "A:7", list), ts());
    CHECK_FALSE(rep.color_matching_ok);
    CHECK_FALSE(rep.mismatched_edges.empty());
    for (const auto& [place, edge] : rep.mismatched_edges) CHECK(place < rep.n + 3);
  }

  TEST_CASE("two tiles on one place") {
    CHECK_THROWS_AS(fixtures::arrangement(2, "A:7", {{1, 1, 1}, {1, 2, 1}}), MultipleTilesOnPlace);
    CHECK_THROWS_AS(fixtures::arrangement(1, "A:7", {{8, 1, 1}}), std::out_of_range);
  }

  TEST_CASE("decode") {
    const auto m = build_model(5, parse_board_spec("A:7"), ts(), {});
    const std::vector<int> zero(static_cast<std::size_t>(m.program().num_vars()), 0);
    CHECK(decode(m.program(), zero, m.board(), 5).placements.empty());
    const auto arr = decode(m.program(), m.encode(fixtures::five_loop()), m.board(), 5);
    auto expect = fixtures::five_loop();
    std::sort(expect.begin(), expect.end());
    CHECK(arr.placement_list() == expect);
    auto twice = zero;
    twice[static_cast<std::size_t>(m.x(1, 3, 1))] = 1;
    twice[static_cast<std::size_t>(m.x(2, 3, 4))] = 1;
    CHECK_THROWS_AS(decode(m.program(), twice, m.board(), 5), MultipleTilesOnPlace);
  }

  TEST_CASE("holes agree with an escape search") {
    std::mt19937 rng(7);
    const Board board = parse_board_spec("A:37");
    int with_holes = 0;
    for (int round = 0; round < 300; ++round) {
      const int count = std::uniform_int_distribution<int>(0, 30)(rng);
      const auto arr = random_arrangement(rng, board, count);
      std::set<AxialCoord> got;
      for (const auto& h : find_holes(arr)) got.insert(h.cells.begin(), h.cells.end());
      CHECK(got == enclosed_cells(arr));
      with_holes += !got.empty();
      if (count <= 5) CHECK(got.empty());
    }
    CHECK(with_holes > 10);
  }

  TEST_CASE("a two-cell cavity is one hole") {
    // Everything on A:19 except the centre and place 2.
    std::vector<Placement> list;
    for (int j = 3; j <= 19; ++j) list.push_back({j, 1, 1});
    const auto holes = find_holes(fixtures::arrangement(17, "A:19", list));
    REQUIRE(holes.size() == 1);
    CHECK(holes[0].places == std::vector<int>{1, 2});
  }

  TEST_CASE("strands partition into loops and paths") {
    std::mt19937 rng(11);
    const Board board = parse_board_spec("A:19");
    for (int round = 0; round < 300; ++round) {
      const int count = std::uniform_int_distribution<int>(1, 19)(rng);
      const auto arr = random_arrangement(rng, board, count);
      for (Color c : {Color::kRed, Color::kBlue, Color::kYellow}) {
        const auto tr = trace_designated(arr, ts(), c);
        std::multiset<int> places;
        for (const auto& l : tr.loops) {
          CHECK(l.size() >= 3);
          CHECK(l.front() == *std::min_element(l.begin(), l.end()));
          places.insert(l.begin(), l.end());
        }
        for (const auto& p : tr.paths) places.insert(p.begin(), p.end());
        std::multiset<int> expect;
        for (const auto& [place, pose] : arr.placements) expect.insert(place);
        CHECK(places == expect);
        CHECK(tr.open_ends == 2 * static_cast<int>(tr.paths.size()));
      }
    }
  }

  TEST_CASE("roundness") {
    std::vector<Placement> all;
    for (int j = 1; j <= 19; ++j) all.push_back({j, 1, 1});
    CHECK(roundness_official(fixtures::arrangement(19, "A:19", all)));
    // Straight lines along one axis.
    const Board b = parse_board_spec("A:37");
    for (int len = 2; len <= 7; ++len) {
      std::vector<Placement> line;
      for (int q = -3; q < -3 + len; ++q) line.push_back({b.place_at({q, 0}), 1, 1});
      const bool round = roundness_official(Arrangement::from_placements(len, b, line));
      CHECK(round == (len < 4));
    }
    // Two full rows of four: rows along r hold 4, the crossing rows hold 1 or 2.
    std::vector<Placement> slab;
    for (int q = 0; q < 4; ++q) {
      slab.push_back({b.place_at({q - 1, 0}), 1, 1});
      slab.push_back({b.place_at({q - 2, 1}), 1, 1});
    }
    CHECK_FALSE(roundness_official(Arrangement::from_placements(8, b, slab)));
  }

  TEST_CASE("row basis matters only with gaps") {
    const Board b = parse_board_spec("A:37");
    // Two short bars far apart: every occupied row is good, but the rows between them are empty.
    std::vector<Placement> list;
    for (AxialCoord c : {AxialCoord{-1, 1}, AxialCoord{-1, 3}, AxialCoord{3, -2}, AxialCoord{3, -1}}) {
      list.push_back({b.place_at(c), 1, 1});
    }
    const auto arr = Arrangement::from_placements(4, b, list);
    CHECK(roundness_official(arr, RoundnessRowBasis::kOccupied));
    CHECK_FALSE(roundness_official(arr, RoundnessRowBasis::kSpanned));
  }

  TEST_CASE("model points pass the local checks") {
    const auto m = build_model(6, parse_board_spec("B:12"), ts(), {});
    int seen = 0;
    solve_all(m.program(), {}, [&](const std::vector<int>& v) {
      const auto rep = report(decode(m.program(), v, m.board(), 6), ts());
      CHECK(rep.color_matching_ok);
      CHECK(rep.tile_counts_ok);
      CHECK(rep.designated_trace.open_ends == 0);
      return ++seen < 200;
    });
    CHECK(seen > 0);
  }

  TEST_CASE("json report") {
    const auto rep = report(fixtures::arrangement(10, "A:19", fixtures::loop_around_hole()), ts());
    const auto j = nlohmann::json::parse(report_json(rep));
    for (const char* key : {"is_tantrix_solution", "n", "placed", "designated_color", "color_matching_ok",
                            "mismatched_edges", "tile_counts_ok", "designated_loops", "open_designated_paths",
                            "open_designated_ends", "holes", "connected", "roundness_ok"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["holes"][0]["places"] == nlohmann::json::array({7}));
    CHECK(j["designated_loops"][0].size() == 10);
    CHECK(j["is_tantrix_solution"] == false);
  }
}
