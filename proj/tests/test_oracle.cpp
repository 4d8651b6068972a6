#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "tantrix/error.hpp"
#include "tantrix/model.hpp"
#include "tantrix/oracle.hpp"
#include "tantrix/solver.hpp"

using namespace tantrix;

namespace {

struct Instance {
  int n;
  const char* board;
};

constexpr Instance kGolden[] = {{3, "B:3"}, {3, "A:7"}, {3, "B:12"}, {4, "A:7"}, {4, "B:12"},
                                {5, "A:7"}, {5, "B:12"}, {6, "A:7"}, {6, "B:12"}};

std::string golden_path(const Instance& in) {
  std::string b = in.board;
  b.erase(b.find(':'), 1);
  return std::string(TANTRIX_SOURCE_DIR) + "/tests/golden/n" + std::to_string(in.n) + "_" + b + ".txt";
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE_MESSAGE(f.good(), "missing " << path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Every valid solution the C1-C5 model admits, folded by symmetry.
std::set<CanonicalSolution> via_model(int n, const Board& board) {
  const auto m = build_model(n, board, default_tileset(), {});
  std::set<CanonicalSolution> out;
  solve_all(m.program(), {}, [&](const std::vector<int>& v) {
    const Arrangement arr = decode(m.program(), v, board, n);
    if (report(arr, default_tileset()).is_tantrix_solution) out.insert(canonical(board, arr.placement_list()));
    return true;
  });
  return out;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("golden enumerations") {
    for (const auto& in : kGolden) {
      CAPTURE(in.n);
      CAPTURE(in.board);
      const auto sols = enumerate_all(in.n, parse_board_spec(in.board), default_tileset());
      CHECK(golden_text(sols) == slurp(golden_path(in)));
    }
  }

  TEST_CASE("the C1-C5 model finds the same solutions") {
    for (const auto& in : kGolden) {
      if (in.n > 5) continue;
      CAPTURE(in.n);
      CAPTURE(in.board);
      const Board board = parse_board_spec(in.board);
      CHECK(via_model(in.n, board) == enumerate_all(in.n, board, default_tileset()));
    }
  }

  TEST_CASE("challenge 5 has solutions on A:7") {
    const Board board = parse_board_spec("A:7");
    const auto sols = enumerate_all(5, board, default_tileset());
    CHECK_FALSE(sols.empty());
    CHECK(sols.count(canonical(board, fixtures::five_loop())) == 1);
  }

  TEST_CASE("every enumerated solution validates and passes the full model") {
    for (const auto& in : kGolden) {
      const Board board = parse_board_spec(in.board);
      ModelOptions opt;
      for (int l : {3, 4, 5}) {
        if (l != in.n) opt.cuts.insert(l);
      }
      const auto m = build_model(in.n, board, default_tileset(), opt);
      for (const auto& s : enumerate_all(in.n, board, default_tileset())) {
        CHECK(report(Arrangement::from_placements(in.n, board, s.placements), default_tileset()).is_tantrix_solution);
        CHECK(verify_assignment(m.program(), m.encode(s.placements)).empty());
      }
    }
  }

  TEST_CASE("board symmetries") {
    for (const char* b : {"A:1", "A:7", "A:19", "A:37"}) CHECK(board_symmetries(parse_board_spec(b)).size() == 6);
    for (const char* b : {"B:3", "B:12", "B:27"}) CHECK(board_symmetries(parse_board_spec(b)).size() == 3);
  }

  TEST_CASE("canonical form ignores rotation") {
    const Board board = parse_board_spec("A:7");
    const auto base = canonical(board, fixtures::five_loop());
    for (const auto& sym : board_symmetries(board)) {
      std::vector<Placement> turned;
      for (const auto& p : fixtures::five_loop()) {
        AxialCoord c = board.coord(p.place);
        for (int t = 0; t < sym.turns; ++t) c = {-c.r, c.q + c.r};
        turned.push_back({board.place_at(c + sym.shift), p.tile, ((p.orientation - 1 - sym.turns) % 6 + 6) % 6 + 1});
      }
      // The turned copy is itself a valid solution.
      CHECK(report(Arrangement::from_placements(5, board, turned), default_tileset()).is_tantrix_solution);
      CHECK(canonical(board, turned) == base);
    }
    CHECK(base.encoding().find(' ') != std::string::npos);
  }

  TEST_CASE("loops come back closed and distinct") {
    const Board board = parse_board_spec("A:19");
    std::array<int, TileSet::kSorts> budget;
    budget.fill(2);
    for (int length : {3, 4, 5, 6}) {
      for (bool all : {false, true}) {
        const auto loops = enumerate_loops(board, default_tileset(), Color::kRed, length, budget, all);
        CHECK_FALSE(loops.empty());
        std::set<std::vector<Placement>> distinct(loops.begin(), loops.end());
        CHECK(distinct.size() == loops.size());
        for (const auto& l : loops) {
          const auto arr = Arrangement::from_placements(length, board, l);
          const auto tr = trace_designated(arr, default_tileset(), Color::kRed);
          REQUIRE(tr.loops.size() == 1);
          CHECK(static_cast<int>(tr.loops[0].size()) == length);
          if (all) CHECK(report(arr, default_tileset()).color_matching_ok);
        }
      }
    }
  }

  TEST_CASE("size limits") {
    CHECK_THROWS_AS(enumerate_all(8, parse_board_spec("B:12"), default_tileset()), InstanceTooLarge);
    CHECK_THROWS_AS(enumerate_all(5, parse_board_spec("A:19"), default_tileset()), InstanceTooLarge);
    CHECK(enumerate_all(2, parse_board_spec("B:3"), default_tileset()).empty());
  }
}
