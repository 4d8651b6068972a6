#pragma once

#include <string>

#include "tantrix/tiles.hpp"
#include "tantrix/validate.hpp"

namespace tantrix {

enum class RenderFormat { kSvg, kAscii };

struct RenderOptions {
  RenderFormat format = RenderFormat::kSvg;
  double hex_size = 30.0;  // centre-to-corner distance in SVG user units
  bool show_place_numbers = true;
  bool highlight_designated = true;
};

// Standalone SVG: one polygon.place per board place, one polygon.tile per
// placed tile, and one path per strand.
std::string render_svg(const Arrangement& arr, const TileSet& tiles, const RenderOptions& options = {});
// Text grid, one line per lattice row; a placed tile shows as tile:orientation.
std::string render_ascii(const Arrangement& arr, const RenderOptions& options = {});
std::string render(const Arrangement& arr, const TileSet& tiles, const RenderOptions& options = {});

}  // namespace tantrix
