#include "tantrix/tiles.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "tantrix/error.hpp"

namespace tantrix {

char color_letter(Color c) {
  switch (c) {
    case Color::kRed: return 'R';
    case Color::kBlue: return 'B';
    case Color::kYellow: return 'Y';
  }
  return '?';
}

const char* color_name(Color c) {
  switch (c) {
    case Color::kRed: return "red";
    case Color::kBlue: return "blue";
    case Color::kYellow: return "yellow";
  }
  return "?";
}

Color parse_color(char c) {
  switch (c) {
    case 'R': return Color::kRed;
    case 'B': return Color::kBlue;
    case 'Y': return Color::kYellow;
    default: throw ParseError(std::string("unknown color '") + c + "'");
  }
}

int strand_angle(Edge a, Edge b) {
  const int d = std::abs(a - b);
  switch (std::min(d, 6 - d)) {
    case 1: return 120;
    case 2: return 60;
    default: return 0;
  }
}

const Strand& TileSpec::strand(Color c) const {
  for (const auto& s : strands) {
    if (s.color == c) return s;
  }
  throw std::logic_error("tile without a strand of every color");
}

Color TileSpec::color_at(Orientation k, Edge e) const {
  const Edge base = shift_edge(e, k - 1);
  for (const auto& s : strands) {
    if (s.covers(base)) return s.color;
  }
  throw std::logic_error("tile edge not covered by a strand");
}

std::pair<Edge, Edge> TileSpec::oriented_strand(Color c, Orientation k) const {
  const Strand& s = strand(c);
  Edge a = shift_edge(s.a, -(k - 1));
  Edge b = shift_edge(s.b, -(k - 1));
  if (a > b) std::swap(a, b);
  return {a, b};
}

namespace {

std::string line_error(int line, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ": " << msg;
  return os.str();
}

Strand parse_strand(const std::string& tok, int line) {
  // <color>:<e1>-<e2>
  if (tok.size() != 5 || tok[1] != ':' || tok[3] != '-') {
    throw ParseError(line_error(line, "malformed strand '" + tok + "'"));
  }
  Strand s;
  try {
    s.color = parse_color(tok[0]);
  } catch (const ParseError& e) {
    throw ParseError(line_error(line, e.what()));
  }
  if (tok[2] < '1' || tok[2] > '6' || tok[4] < '1' || tok[4] > '6') {
    throw ParseError(line_error(line, "strand edges must be 1..6 in '" + tok + "'"));
  }
  s.a = tok[2] - '0';
  s.b = tok[4] - '0';
  if (s.a == s.b) throw ParseError(line_error(line, "strand joins an edge to itself in '" + tok + "'"));
  if (s.a > s.b) std::swap(s.a, s.b);
  return s;
}

}  // namespace

TileSet load_tileset(std::string_view text) {
  std::array<TileSpec, TileSet::kSorts> tiles{};
  std::array<bool, TileSet::kSorts> seen{};
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] != "tile" || tok.size() != 6) {
      throw ParseError(line_error(line, "expected 'tile <num> <back> <strand> <strand> <strand>'"));
    }
    int number = 0;
    try {
      std::size_t used = 0;
      number = std::stoi(tok[1], &used);
      if (used != tok[1].size()) throw std::invalid_argument(tok[1]);
    } catch (const std::exception&) {
      throw ParseError(line_error(line, "bad tile number '" + tok[1] + "'"));
    }
    if (number < 1 || number > TileSet::kSorts) throw ParseError(line_error(line, "tile number out of range"));
    if (seen[number - 1]) throw ParseError(line_error(line, "tile " + tok[1] + " defined twice"));
    seen[number - 1] = true;
    if (tok[2].size() != 1) throw ParseError(line_error(line, "back color must be R, B or Y"));

    TileSpec& t = tiles[number - 1];
    t.number = number;
    try {
      t.back = parse_color(tok[2][0]);
    } catch (const ParseError& e) {
      throw ParseError(line_error(line, e.what()));
    }
    std::set<Edge> edges;
    std::set<Color> colors;
    for (int s = 0; s < 3; ++s) {
      t.strands[s] = parse_strand(tok[3 + s], line);
      if (!edges.insert(t.strands[s].a).second || !edges.insert(t.strands[s].b).second) {
        throw ParseError(line_error(line, "strands of tile " + tok[1] + " share an edge"));
      }
      if (!colors.insert(t.strands[s].color).second) {
        throw ParseError(line_error(line, "tile " + tok[1] + " repeats a strand color"));
      }
    }
  }
  for (int i = 0; i < TileSet::kSorts; ++i) {
    if (!seen[i]) throw ParseError("tile " + std::to_string(i + 1) + " missing");
  }
  TileSet set(tiles);
  check_facts(set);
  return set;
}

TileSet load_tileset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tileset '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_tileset(ss.str());
}

std::string format_tileset(const TileSet& set) {
  std::ostringstream os;
  for (const auto& t : set.tiles()) {
    os << "tile " << t.number << ' ' << color_letter(t.back);
    for (const auto& s : t.strands) os << ' ' << color_letter(s.color) << ':' << s.a << '-' << s.b;
    os << '\n';
  }
  return os.str();
}

const std::string& default_tileset_text() {
  static const std::string text =
      "# Tantrix Discovery tiles, base pose (orientation 1).\n"
      "tile 1 Y R:1-3 B:2-4 Y:5-6\n"
      "tile 2 Y R:2-3 B:1-4 Y:5-6\n"
      "tile 3 Y R:4-5 B:1-6 Y:2-3\n"
      "tile 4 R R:2-6 B:1-4 Y:3-5\n"
      "tile 5 R R:1-4 B:2-3 Y:5-6\n"
      "tile 6 B R:3-5 B:2-6 Y:1-4\n"
      "tile 7 B R:1-3 B:5-6 Y:2-4\n"
      "tile 8 B R:2-4 B:5-6 Y:1-3\n"
      "tile 9 Y R:1-4 B:2-6 Y:3-5\n"
      "tile 10 R R:2-4 B:1-3 Y:5-6\n";
  return text;
}

const TileSet& default_tileset() {
  static const TileSet set = load_tileset(default_tileset_text());
  return set;
}

void check_facts(const TileSet& set) {
  auto red_angle = [&](int i) { return set.tile(i).strand(Color::kRed).angle(); };
  for (int i : {2, 3}) {
    if (red_angle(i) != 120) throw FactViolation("F1", "tile " + std::to_string(i) + " must have a 120 degree red strand");
  }
  for (int i : {5, 9}) {
    if (red_angle(i) != 0) throw FactViolation("F2", "tile " + std::to_string(i) + " must have a 0 degree red strand");
  }
  // Tiles named in the four-tile pattern rows; tile 3 is covered by F1.
  for (int i : {1, 4, 6, 7, 8, 10}) {
    if (red_angle(i) != 60) throw FactViolation("F3", "tile " + std::to_string(i) + " must have a 60 degree red strand");
  }
  for (int i : {4, 5}) {
    if (set.tile(i).back != Color::kRed) throw FactViolation("F4", "tile " + std::to_string(i) + " must have a red back");
  }
}

namespace {

struct PatternGroup {
  int direction;                               // 0 for place j, l for a(j,l)
  std::pair<Edge, Edge> red;                   // edge pair the red strand must occupy
  std::vector<std::pair<int, Orientation>> terms;  // (tile, orientation)
};

struct PatternRow {
  const char* name;
  std::vector<PatternGroup> groups;
};

using Terms = std::vector<std::pair<int, Orientation>>;

// Red-designated pattern rows written out by hand, one group per place.
const std::vector<PatternRow>& reference_rows() {
  static const Terms k60_j_e1{{1, 2}, {4, 1}, {6, 4}, {7, 2}, {8, 3}, {10, 3}};
  static const Terms k60_a_e1{{1, 5}, {4, 4}, {6, 1}, {7, 5}, {8, 6}, {10, 6}};
  static const Terms k60_j_e2{{1, 1}, {4, 6}, {6, 3}, {7, 1}, {8, 2}, {10, 2}};
  static const Terms k60_a_e2{{1, 4}, {4, 3}, {6, 6}, {7, 4}, {8, 5}, {10, 5}};
  static const Terms k60_j_e3{{1, 6}, {4, 5}, {6, 2}, {7, 6}, {8, 1}, {10, 1}};
  static const Terms k60_a_e3{{1, 3}, {4, 2}, {6, 5}, {7, 3}, {8, 4}, {10, 4}};
  static const std::vector<PatternRow> rows = {
      {"three-tile row 1", {{0, {1, 2}, {{2, 2}, {3, 4}}}, {1, {3, 4}, {{2, 6}, {3, 2}}}}},
      {"three-tile row 2", {{0, {1, 6}, {{2, 3}, {3, 5}}}, {1, {4, 5}, {{2, 5}, {3, 1}}}}},
      {"three-tile row 3", {{0, {2, 3}, {{2, 1}, {3, 3}}}, {2, {4, 5}, {{2, 5}, {3, 1}}}}},
      {"three-tile row 4", {{0, {1, 2}, {{2, 2}, {3, 4}}}, {2, {5, 6}, {{2, 4}, {3, 6}}}}},
      {"three-tile row 5", {{0, {3, 4}, {{2, 6}, {3, 2}}}, {3, {5, 6}, {{2, 4}, {3, 6}}}}},
      {"three-tile row 6", {{0, {2, 3}, {{2, 1}, {3, 3}}}, {3, {1, 6}, {{2, 3}, {3, 5}}}}},
      {"four-tile row 1", {{0, {2, 6}, k60_j_e1}, {1, {3, 5}, k60_a_e1}}},
      {"four-tile row 2", {{0, {1, 3}, k60_j_e2}, {2, {4, 6}, k60_a_e2}}},
      {"four-tile row 3", {{0, {2, 4}, k60_j_e3}, {3, {1, 5}, k60_a_e3}}},
      {"five-tile row 1",
       {{0, {3, 6}, {{5, 2}, {5, 5}, {9, 2}, {9, 5}}}, {1, {3, 5}, k60_a_e1}, {2, {4, 6}, k60_a_e2}}},
      {"five-tile row 2",
       {{0, {1, 3}, k60_j_e2}, {1, {2, 4}, k60_j_e3}, {2, {1, 4}, {{5, 1}, {5, 4}, {9, 1}, {9, 4}}}}},
      {"five-tile row 3",
       {{0, {2, 6}, k60_j_e1}, {1, {2, 5}, {{5, 3}, {5, 6}, {9, 3}, {9, 6}}}, {2, {1, 5}, k60_a_e3}}},
      {"five-tile row 4",
       {{0, {1, 4}, {{5, 1}, {5, 4}, {9, 1}, {9, 4}}}, {2, {4, 6}, k60_a_e2}, {3, {1, 5}, k60_a_e3}}},
      {"five-tile row 5",
       {{0, {2, 4}, k60_j_e3}, {2, {3, 5}, k60_a_e1}, {3, {2, 5}, {{5, 3}, {5, 6}, {9, 3}, {9, 6}}}}},
      {"five-tile row 6",
       {{0, {1, 3}, k60_j_e2}, {2, {3, 6}, {{5, 2}, {5, 5}, {9, 2}, {9, 5}}}, {3, {2, 6}, k60_j_e1}}},
  };
  return rows;
}

}  // namespace

std::vector<std::string> check_pattern_consistency(const TileSet& set) {
  std::vector<std::string> issues;
  for (const auto& row : reference_rows()) {
    for (const auto& g : row.groups) {
      for (const auto& [tile, k] : g.terms) {
        const auto got = set.tile(tile).oriented_strand(Color::kRed, k);
        if (got != g.red) {
          std::ostringstream os;
          os << row.name << ": tile " << tile << " orientation " << k << " puts red on " << got.first << '-'
             << got.second << ", pattern needs " << g.red.first << '-' << g.red.second;
          issues.push_back(os.str());
        }
      }
    }
  }
  return issues;
}

int color_code(Color c, Color designated) {
  if (c == designated) return 3;
  int code = 1;
  for (Color other : {Color::kRed, Color::kBlue, Color::kYellow}) {
    if (other == designated) continue;
    if (other == c) return code;
    ++code;
  }
  return 0;
}

int oriented_color(const TileSpec& tile, Orientation k, Edge e, Color designated) {
  return color_code(tile.color_at(k, e), designated);
}

Color designated_color(const TileSet& set, int n) {
  const int digit = n % 10;
  return set.tile(digit == 0 ? 10 : digit).back;
}

int tile_multiplicity(int n, int tile) {
  const int num = n + 1 - tile;
  if (num <= 0) return 0;
  return (num + 9) / 10;
}

}  // namespace tantrix
