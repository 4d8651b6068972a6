#include "tantrix/solution_io.hpp"

#include <json.hpp>

#include "tantrix/error.hpp"

namespace tantrix {

std::string write_solution_json(const Arrangement& arr, const TileSet& tiles) {
  nlohmann::ordered_json j;
  j["n"] = arr.n;
  j["board"] = {{"kind", std::string(1, board_kind_letter(arr.board.kind()))}, {"size", arr.board.size()}};
  j["designated_color"] = color_name(designated_color(tiles, arr.n));
  auto list = nlohmann::ordered_json::array();
  for (const auto& [place, pose] : arr.placements) {
    list.push_back({{"place", place}, {"tile", pose.tile}, {"orientation", pose.orientation}});
  }
  j["placements"] = list;
  return j.dump(2) + "\n";
}

namespace {

int get_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

}  // namespace

Arrangement read_solution_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("solution JSON must be an object");
  const int n = get_int(j, "n");
  if (!j.contains("board") || !j["board"].is_object()) throw ParseError("field 'board' must be an object");
  const auto& bj = j["board"];
  if (!bj.contains("kind") || !bj["kind"].is_string()) throw ParseError("field 'board.kind' must be \"A\" or \"B\"");
  const std::string kind = bj["kind"].get<std::string>();
  if (kind != "A" && kind != "B") throw ParseError("field 'board.kind' must be \"A\" or \"B\"");
  const int size = get_int(bj, "size");
  Board board;
  try {
    board = make_board(kind == "A" ? BoardKind::kTypeA : BoardKind::kTypeB, size);
  } catch (const IllegalSize& e) {
    throw ParseError(e.what());
  }
  if (j.contains("designated_color")) {
    const auto& dc = j["designated_color"];
    if (!dc.is_string() || (dc != "red" && dc != "blue" && dc != "yellow")) {
      throw ParseError("field 'designated_color' must be red, blue or yellow");
    }
  }
  if (!j.contains("placements") || !j["placements"].is_array()) throw ParseError("field 'placements' must be an array");
  std::vector<Placement> list;
  for (const auto& pj : j["placements"]) {
    if (!pj.is_object()) throw ParseError("placements must be objects");
    const Placement p{get_int(pj, "place"), get_int(pj, "tile"), get_int(pj, "orientation")};
    if (p.place < 1 || p.place > board.size()) throw ParseError("place " + std::to_string(p.place) + " is off the board");
    if (p.tile < 1 || p.tile > TileSet::kSorts) throw ParseError("tile " + std::to_string(p.tile) + " does not exist");
    if (p.orientation < 1 || p.orientation > 6) throw ParseError("orientation must be 1..6");
    list.push_back(p);
  }
  try {
    return Arrangement::from_placements(n, board, list);
  } catch (const MultipleTilesOnPlace& e) {
    throw ParseError(e.what());
  }
}

}  // namespace tantrix
