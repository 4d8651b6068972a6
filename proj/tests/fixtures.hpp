#pragma once

#include <string>
#include <vector>

#include "tantrix/validate.hpp"

namespace fixtures {

// Red five-loop for challenge 5 on A:7; one of the oracle's solutions.
std::vector<tantrix::Placement> five_loop();
// Challenge 10 on A:19: one red loop through all ten tiles around a single
// empty place, every edge matching.
std::vector<tantrix::Placement> loop_around_hole();
// Challenge 5 on A:7: colours match everywhere, no hole, but every red
// line ends against an empty place or the rim.
std::vector<tantrix::Placement> open_lines();

tantrix::Arrangement arrangement(int n, const std::string& board, const std::vector<tantrix::Placement>& list);

}  // namespace fixtures
