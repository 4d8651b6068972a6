#include "fixtures.hpp"

namespace fixtures {

using tantrix::Placement;

std::vector<Placement> five_loop() { return {{1, 5, 1}, {4, 2, 6}, {5, 1, 4}, {6, 4, 2}, {7, 3, 4}}; }

std::vector<Placement> loop_around_hole() {
  return {{1, 1, 1}, {2, 4, 2}, {3, 5, 4},  {4, 6, 6},  {6, 7, 4},
          {8, 9, 5}, {9, 2, 1}, {12, 3, 2}, {18, 8, 4}, {19, 10, 3}};
}

std::vector<Placement> open_lines() { return {{3, 1, 1}, {4, 2, 3}, {5, 3, 3}, {6, 4, 1}, {7, 5, 4}}; }

tantrix::Arrangement arrangement(int n, const std::string& board, const std::vector<Placement>& list) {
  return tantrix::Arrangement::from_placements(n, tantrix::parse_board_spec(board), list);
}

}  // namespace fixtures
