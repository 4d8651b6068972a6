#pragma once

#include <string>
#include <string_view>

#include "tantrix/tiles.hpp"
#include "tantrix/validate.hpp"

namespace tantrix {

// {"n", "board": {"kind", "size"}, "designated_color", "placements": [{"place", "tile", "orientation"}]}
// Placements are written in place order; the output ends with a newline.
std::string write_solution_json(const Arrangement& arr, const TileSet& tiles);

// Throws ParseError on malformed JSON, missing fields, an illegal board,
// out-of-range numbers or a place used twice.
Arrangement read_solution_json(std::string_view text);

}  // namespace tantrix
