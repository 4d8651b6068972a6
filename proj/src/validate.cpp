#include "tantrix/validate.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "tantrix/error.hpp"

namespace tantrix {

std::vector<Placement> Arrangement::placement_list() const {
  std::vector<Placement> out;
  out.reserve(placements.size());
  for (const auto& [place, pose] : placements) out.push_back({place, pose.tile, pose.orientation});
  return out;
}

Arrangement Arrangement::from_placements(int n, const Board& board, const std::vector<Placement>& placements) {
  Arrangement arr{n, board, {}};
  for (const auto& p : placements) {
    if (p.place < 1 || p.place > board.size()) throw std::out_of_range("place " + std::to_string(p.place) + " is off the board");
    if (!arr.placements.emplace(p.place, Pose{p.tile, p.orientation}).second) {
      throw MultipleTilesOnPlace("place " + std::to_string(p.place) + " holds more than one tile");
    }
  }
  return arr;
}

Arrangement decode(const IntegerProgram& program, const std::vector<int>& values, const Board& board, int n) {
  std::vector<Placement> list;
  for (int id = 0; id < program.num_vars(); ++id) {
    const VarRef& ref = program.var(id);
    if (ref.kind == VarKind::kX && values.at(static_cast<std::size_t>(id)) == 1) list.push_back({ref.b, ref.a, ref.c});
  }
  return Arrangement::from_placements(n, board, list);
}

DesignatedTrace trace_designated(const Arrangement& arr, const TileSet& tiles, Color color) {
  // Each placed tile carries one strand of the colour; link strand ends that
  // meet across a shared edge.
  std::map<int, std::vector<int>> links;
  DesignatedTrace out;
  for (const auto& [place, pose] : arr.placements) {
    auto [a, b] = tiles.tile(pose.tile).oriented_strand(color, pose.orientation);
    auto& mine = links[place];
    for (Edge e : {a, b}) {
      const int other = arr.board.adjacent(place, e);
      auto it = other == 0 ? arr.placements.end() : arr.placements.find(other);
      if (it != arr.placements.end()) {
        auto [oa, ob] = tiles.tile(it->second.tile).oriented_strand(color, it->second.orientation);
        const Edge back = opposite_edge(e);
        if (oa == back || ob == back) {
          mine.push_back(other);
          continue;
        }
      }
      ++out.open_ends;
    }
  }
  std::set<int> seen;
  for (const auto& [start, nbrs] : links) {
    if (seen.count(start)) continue;
    // Walk to one end of the chain first (or all the way round a loop).
    int prev = 0, cur = start;
    bool closed = false;
    while (true) {
      const auto& ln = links.at(cur);
      int next = 0;
      for (int nb : ln) {
        if (nb != prev) {
          next = nb;
          break;
        }
      }
      if (next == 0) break;
      if (next == start) {
        closed = true;
        break;
      }
      prev = cur;
      cur = next;
    }
    std::vector<int> seq;
    if (closed) {
      int lo = start;
      std::vector<int> ring{start};
      prev = start;
      cur = links.at(start).front();
      while (cur != start) {
        ring.push_back(cur);
        lo = std::min(lo, cur);
        const auto& ln = links.at(cur);
        const int next = ln[0] == prev ? ln[1] : ln[0];
        prev = cur;
        cur = next;
      }
      // Rotate to the smallest place and head towards its smaller neighbour.
      auto it = std::find(ring.begin(), ring.end(), lo);
      std::rotate(ring.begin(), it, ring.end());
      if (ring.size() > 2 && ring.back() < ring[1]) std::reverse(ring.begin() + 1, ring.end());
      for (int p : ring) seen.insert(p);
      out.loops.push_back(std::move(ring));
    } else {
      prev = 0;
      while (cur != 0) {
        seq.push_back(cur);
        seen.insert(cur);
        int next = 0;
        for (int nb : links.at(cur)) {
          if (nb != prev) next = nb;
        }
        prev = cur;
        cur = next;
      }
      if (seq.size() > 1 && seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
      out.paths.push_back(std::move(seq));
    }
  }
  std::sort(out.loops.begin(), out.loops.end());
  std::sort(out.paths.begin(), out.paths.end());
  return out;
}

std::vector<Hole> find_holes(const Arrangement& arr) {
  std::vector<Hole> holes;
  if (arr.placements.empty()) return holes;
  std::unordered_set<AxialCoord, AxialHash> filled;
  int qmin = 0, qmax = 0, rmin = 0, rmax = 0;
  bool first = true;
  for (const auto& [place, pose] : arr.placements) {
    const AxialCoord c = arr.board.coord(place);
    filled.insert(c);
    if (first) {
      qmin = qmax = c.q;
      rmin = rmax = c.r;
      first = false;
    }
    qmin = std::min(qmin, c.q);
    qmax = std::max(qmax, c.q);
    rmin = std::min(rmin, c.r);
    rmax = std::max(rmax, c.r);
  }
  // Flood the empty cells of a one-cell-wider parallelogram from a corner;
  // its frame is empty and connected, so whatever stays dry is enclosed.
  --qmin;
  --rmin;
  ++qmax;
  ++rmax;
  auto inside = [&](AxialCoord c) { return c.q >= qmin && c.q <= qmax && c.r >= rmin && c.r <= rmax; };
  std::unordered_set<AxialCoord, AxialHash> outside;
  std::deque<AxialCoord> todo{{qmin, rmin}};
  outside.insert({qmin, rmin});
  while (!todo.empty()) {
    const AxialCoord c = todo.front();
    todo.pop_front();
    for (const auto& d : kLatticeDirections) {
      const AxialCoord nb = c + d;
      if (inside(nb) && !filled.count(nb) && outside.insert(nb).second) todo.push_back(nb);
    }
  }
  std::unordered_set<AxialCoord, AxialHash> done;
  for (int r = rmin; r <= rmax; ++r) {
    for (int q = qmin; q <= qmax; ++q) {
      const AxialCoord c{q, r};
      if (filled.count(c) || outside.count(c) || done.count(c)) continue;
      Hole h;
      std::deque<AxialCoord> queue{c};
      done.insert(c);
      while (!queue.empty()) {
        const AxialCoord cur = queue.front();
        queue.pop_front();
        h.cells.push_back(cur);
        for (const auto& d : kLatticeDirections) {
          const AxialCoord nb = cur + d;
          if (!filled.count(nb) && !outside.count(nb) && done.insert(nb).second) queue.push_back(nb);
        }
      }
      std::sort(h.cells.begin(), h.cells.end());
      for (const auto& cell : h.cells) {
        if (const int p = arr.board.place_at(cell); p != 0) h.places.push_back(p);
      }
      std::sort(h.places.begin(), h.places.end());
      holes.push_back(std::move(h));
    }
  }
  return holes;
}

bool check_connected(const Arrangement& arr) {
  if (arr.placements.size() <= 1) return true;
  std::set<int> seen{arr.placements.begin()->first};
  std::deque<int> todo{arr.placements.begin()->first};
  while (!todo.empty()) {
    const int p = todo.front();
    todo.pop_front();
    for (Edge e = 1; e <= 6; ++e) {
      const int nb = arr.board.adjacent(p, e);
      if (nb != 0 && arr.placements.count(nb) && seen.insert(nb).second) todo.push_back(nb);
    }
  }
  return seen.size() == arr.placements.size();
}

bool roundness_official(const Arrangement& arr, RoundnessRowBasis basis) {
  if (arr.placements.empty()) return false;
  // Rows along the three lattice axes: constant r, constant q, constant s.
  std::array<std::map<int, int>, 3> rows;
  for (const auto& [place, pose] : arr.placements) {
    const AxialCoord c = arr.board.coord(place);
    ++rows[0][c.r];
    ++rows[1][c.q];
    ++rows[2][-c.q - c.r];
  }
  std::array<int, 3> longest{};
  for (int a = 0; a < 3; ++a) {
    for (const auto& [line, count] : rows[static_cast<std::size_t>(a)]) {
      longest[static_cast<std::size_t>(a)] = std::max(longest[static_cast<std::size_t>(a)], count);
    }
  }
  const int x = *std::max_element(longest.begin(), longest.end());
  for (int a = 0; a < 3; ++a) {
    if (longest[static_cast<std::size_t>(a)] != x) continue;
    bool ok = true;
    for (int d = 0; d < 3 && ok; ++d) {
      if (d == a) continue;
      const auto& lines = rows[static_cast<std::size_t>(d)];
      long good = 0;
      for (const auto& [line, count] : lines) {
        if (10L * count > 3L * x) ++good;
      }
      const long total = basis == RoundnessRowBasis::kOccupied
                             ? static_cast<long>(lines.size())
                             : static_cast<long>(lines.rbegin()->first - lines.begin()->first + 1);
      ok = 4 * good > 3 * total;
    }
    if (ok) return true;
  }
  return false;
}

ValidationReport report(const Arrangement& arr, const TileSet& tiles, RoundnessRowBasis basis) {
  ValidationReport rep;
  rep.n = arr.n;
  rep.placed = static_cast<int>(arr.placements.size());
  rep.designated = designated_color(tiles, std::max(arr.n, 0));

  rep.color_matching_ok = true;
  for (const auto& [place, pose] : arr.placements) {
    for (Edge e = 1; e <= 6; ++e) {
      const int other = arr.board.adjacent(place, e);
      if (other <= place) continue;
      auto it = arr.placements.find(other);
      if (it == arr.placements.end()) continue;
      const Color mine = tiles.tile(pose.tile).color_at(pose.orientation, e);
      const Color theirs = tiles.tile(it->second.tile).color_at(it->second.orientation, opposite_edge(e));
      if (mine != theirs) {
        rep.color_matching_ok = false;
        rep.mismatched_edges.emplace_back(place, e);
      }
    }
  }

  std::map<int, int> counts;
  for (const auto& [place, pose] : arr.placements) ++counts[pose.tile];
  rep.tile_counts_ok = arr.n >= 1;
  for (int i = 1; i <= TileSet::kSorts && rep.tile_counts_ok; ++i) {
    rep.tile_counts_ok = counts[i] == tile_multiplicity(arr.n, i);
  }
  for (const auto& [tile, count] : counts) {
    if (tile < 1 || tile > TileSet::kSorts) rep.tile_counts_ok = false;
  }

  rep.designated_trace = trace_designated(arr, tiles, rep.designated);
  rep.holes = find_holes(arr);
  rep.connected = check_connected(arr);
  rep.roundness_ok = roundness_official(arr, basis);
  const auto& loops = rep.designated_trace.loops;
  rep.is_tantrix_solution = arr.n >= 3 && rep.placed == arr.n && rep.tile_counts_ok && rep.color_matching_ok &&
                            loops.size() == 1 && static_cast<int>(loops.front().size()) == arr.n &&
                            rep.designated_trace.open_ends == 0 && rep.holes.empty() && rep.connected;
  return rep;
}

std::string report_json(const ValidationReport& rep, int indent) {
  nlohmann::ordered_json j;
  j["is_tantrix_solution"] = rep.is_tantrix_solution;
  j["n"] = rep.n;
  j["placed"] = rep.placed;
  j["designated_color"] = color_name(rep.designated);
  j["color_matching_ok"] = rep.color_matching_ok;
  auto mism = nlohmann::ordered_json::array();
  for (const auto& [place, edge] : rep.mismatched_edges) mism.push_back({place, edge});
  j["mismatched_edges"] = mism;
  j["tile_counts_ok"] = rep.tile_counts_ok;
  j["designated_loops"] = rep.designated_trace.loops;
  j["open_designated_paths"] = rep.designated_trace.paths;
  j["open_designated_ends"] = rep.designated_trace.open_ends;
  auto holes = nlohmann::ordered_json::array();
  for (const auto& h : rep.holes) {
    nlohmann::ordered_json hj;
    auto cells = nlohmann::ordered_json::array();
    for (const auto& c : h.cells) cells.push_back({c.q, c.r});
    hj["cells"] = cells;
    hj["places"] = h.places;
    holes.push_back(hj);
  }
  j["holes"] = holes;
  j["connected"] = rep.connected;
  j["roundness_ok"] = rep.roundness_ok;
  return j.dump(indent);
}

}  // namespace tantrix
