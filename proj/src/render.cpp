#include "tantrix/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tantrix {

namespace {

struct Point {
  double x = 0;
  double y = 0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

// Pointy-topped layout with +r pointing up-right on screen.
Point center_of(AxialCoord c, double size) {
  return {size * std::sqrt(3.0) * (c.q + c.r / 2.0), -size * 1.5 * c.r};
}

Point corner(Point c, double size, int i) {
  const double a = std::numbers::pi / 180.0 * (30.0 + 60.0 * i);
  return {c.x + size * std::cos(a), c.y - size * std::sin(a)};
}

// Midpoint of edge e, which faces lattice direction (e+1) mod 6.
Point edge_mid(Point c, double size, Edge e) {
  const int dir = (e + 1) % 6;
  const double a = std::numbers::pi / 180.0 * (60.0 * dir);
  const double apothem = size * std::sqrt(3.0) / 2.0;
  return {c.x + apothem * std::cos(a), c.y - apothem * std::sin(a)};
}

std::string polygon_points(Point c, double size) {
  std::string out;
  for (int i = 0; i < 6; ++i) {
    const Point p = corner(c, size, i);
    if (i) out += ' ';
    out += fmt(p.x) + ',' + fmt(p.y);
  }
  return out;
}

const char* stroke_of(Color c) {
  switch (c) {
    case Color::kRed: return "#d62728";
    case Color::kBlue: return "#1f5fbf";
    case Color::kYellow: return "#e8c21a";
  }
  return "#000";
}

}  // namespace

std::string render_svg(const Arrangement& arr, const TileSet& tiles, const RenderOptions& options) {
  if (!(options.hex_size > 0)) throw std::invalid_argument("hex size must be positive");
  const double s = options.hex_size;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const auto& c : arr.board.coords()) {
    const Point p = center_of(c, s);
    if (first) {
      minx = maxx = p.x;
      miny = maxy = p.y;
      first = false;
    }
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const double pad = s * 1.5;
  const Color designated = designated_color(tiles, std::max(arr.n, 0));
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - pad) << ' ' << fmt(miny - pad) << ' '
     << fmt(maxx - minx + 2 * pad) << ' ' << fmt(maxy - miny + 2 * pad) << "\">\n";
  os << "  <title>challenge " << arr.n << " on board " << arr.board.label() << "</title>\n";
  os << "  <g class=\"board\" fill=\"none\" stroke=\"#b0b0b0\" stroke-width=\"1\">\n";
  for (int j = 1; j <= arr.board.size(); ++j) {
    os << "    <polygon class=\"place\" points=\"" << polygon_points(center_of(arr.board.coord(j), s), s) << "\"/>\n";
  }
  os << "  </g>\n";
  os << "  <g class=\"tiles\">\n";
  for (const auto& [place, pose] : arr.placements) {
    const Point c = center_of(arr.board.coord(place), s);
    os << "    <polygon class=\"tile\" points=\"" << polygon_points(c, s * 0.97) << "\" fill=\"#1e1e1e\"/>\n";
    for (Color col : {Color::kRed, Color::kBlue, Color::kYellow}) {
      auto [a, b] = tiles.tile(pose.tile).oriented_strand(col, pose.orientation);
      const Point pa = edge_mid(c, s, a);
      const Point pb = edge_mid(c, s, b);
      const bool bold = options.highlight_designated && col == designated;
      os << "    <path class=\"strand\" d=\"M " << fmt(pa.x) << ' ' << fmt(pa.y) << " Q " << fmt(c.x) << ' '
         << fmt(c.y) << ' ' << fmt(pb.x) << ' ' << fmt(pb.y) << "\" fill=\"none\" stroke=\"" << stroke_of(col)
         << "\" stroke-width=\"" << fmt(s * (bold ? 0.22 : 0.14)) << "\" stroke-linecap=\"round\"/>\n";
    }
  }
  os << "  </g>\n";
  if (options.show_place_numbers) {
    os << "  <g class=\"labels\" font-family=\"monospace\" font-size=\"" << fmt(s * 0.35)
       << "\" text-anchor=\"middle\" fill=\"#808080\">\n";
    for (int j = 1; j <= arr.board.size(); ++j) {
      const Point c = center_of(arr.board.coord(j), s);
      os << "    <text x=\"" << fmt(c.x) << "\" y=\"" << fmt(c.y + s * 0.62) << "\">" << j << "</text>\n";
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const Arrangement& arr, const RenderOptions& options) {
  int rmin = 0, rmax = 0, xmin = 0, xmax = 0;
  bool first = true;
  for (const auto& c : arr.board.coords()) {
    const int x = 2 * c.q + c.r;
    if (first) {
      rmin = rmax = c.r;
      xmin = xmax = x;
      first = false;
    }
    rmin = std::min(rmin, c.r);
    rmax = std::max(rmax, c.r);
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  constexpr int kHalf = 3;  // half a cell width in characters
  std::ostringstream os;
  os << "challenge " << arr.n << ", board " << arr.board.label() << '\n';
  for (int r = rmax; r >= rmin; --r) {
    std::string line(static_cast<std::size_t>((xmax - xmin + 2) * kHalf), ' ');
    for (int j = 1; j <= arr.board.size(); ++j) {
      const AxialCoord c = arr.board.coord(j);
      if (c.r != r) continue;
      std::string cell;
      if (auto it = arr.placements.find(j); it != arr.placements.end()) {
        cell = std::to_string(it->second.tile) + ':' + std::to_string(it->second.orientation);
      } else {
        cell = options.show_place_numbers ? '.' + std::to_string(j) : ".";
      }
      const auto col = static_cast<std::size_t>((2 * c.q + r - xmin) * kHalf);
      line.replace(col, std::min(cell.size(), line.size() - col), cell.substr(0, line.size() - col));
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string render(const Arrangement& arr, const TileSet& tiles, const RenderOptions& options) {
  return options.format == RenderFormat::kSvg ? render_svg(arr, tiles, options) : render_ascii(arr, options);
}

}  // namespace tantrix
