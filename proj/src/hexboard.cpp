#include "tantrix/hexboard.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tantrix/error.hpp"

namespace tantrix {

int ring_of(AxialCoord c) {
  return std::max({std::abs(c.q), std::abs(c.r), std::abs(c.q + c.r)});
}

AxialCoord neighbor(AxialCoord c, Edge e) {
  // Edge 1 faces lattice direction 2; calibrated so that a(4,6)=12 and
  // a(8,5)=0 on the 19-place board.
  return c + kLatticeDirections[static_cast<std::size_t>((e + 1) % 6)];
}

std::optional<Edge> edge_towards(AxialCoord from, AxialCoord to) {
  for (Edge e = 1; e <= 6; ++e) {
    if (neighbor(from, e) == to) return e;
  }
  return std::nullopt;
}

namespace {

// Cell at 0-based position `t` of ring `r` counted from the corner r*(+q),
// walking counter-clockwise.
AxialCoord ring_walk(int r, int t) {
  const auto& d0 = kLatticeDirections[0];
  AxialCoord c{d0.q * r, d0.r * r};
  const int side = t / r;
  const int along = t % r;
  for (int s = 0; s < side; ++s) {
    const auto& d = kLatticeDirections[static_cast<std::size_t>((s + 2) % 6)];
    c = c + AxialCoord{d.q * r, d.r * r};
  }
  const auto& d = kLatticeDirections[static_cast<std::size_t>((side + 2) % 6)];
  return c + AxialCoord{d.q * along, d.r * along};
}

}  // namespace

AxialCoord spiral_coord(int place) {
  if (place < 1) throw std::out_of_range("place numbers start at 1");
  if (place == 1) return {0, 0};
  int r = 1;
  while (3 * r * (r + 1) + 1 < place) ++r;
  const int t = place - (3 * r * (r - 1) + 1) - 1;
  const int len = 6 * r;
  return ring_walk(r, ((t - (r - 1)) % len + len) % len);
}

bool is_legal_size(BoardKind kind, int size) {
  if (size < 1) return false;
  for (int r = 0;; ++r) {
    const int s = kind == BoardKind::kTypeA ? 3 * r * (r + 1) + 1 : 3 * r * r;
    if (s == size && (kind == BoardKind::kTypeA || r >= 1)) return true;
    if (s > size) return false;
  }
}

Board make_board(BoardKind kind, int size) {
  if (!is_legal_size(kind, size)) {
    std::ostringstream os;
    os << "board size " << size << " is not a legal type " << board_kind_letter(kind) << " size";
    throw IllegalSize(os.str());
  }
  Board b;
  b.kind_ = kind;
  b.places_.reserve(static_cast<std::size_t>(size));
  for (int j = 1; j <= size; ++j) {
    b.places_.push_back(spiral_coord(j));
    b.index_.emplace(b.places_.back(), j);
  }
  b.adjacency_.assign(static_cast<std::size_t>(size) * 6, 0);
  for (int j = 1; j <= size; ++j) {
    for (Edge e = 1; e <= 6; ++e) {
      b.adjacency_[static_cast<std::size_t>((j - 1) * 6 + (e - 1))] = b.place_at(neighbor(b.places_[j - 1], e));
    }
  }
  return b;
}

int Board::place_at(AxialCoord c) const {
  auto it = index_.find(c);
  return it == index_.end() ? 0 : it->second;
}

std::string Board::label() const {
  std::ostringstream os;
  os << board_kind_letter(kind_) << ':' << size();
  return os.str();
}

char board_kind_letter(BoardKind kind) { return kind == BoardKind::kTypeA ? 'A' : 'B'; }

Board smallest_board_above(BoardKind kind, int n) {
  for (int size = n + 1;; ++size) {
    if (is_legal_size(kind, size)) return make_board(kind, size);
  }
}

Board parse_board_spec(const std::string& spec) {
  if (spec.size() < 3 || spec[1] != ':' || (spec[0] != 'A' && spec[0] != 'B')) {
    throw ParseError("board spec must look like A:19 or B:12, got '" + spec + "'");
  }
  std::size_t used = 0;
  int size = 0;
  try {
    size = std::stoi(spec.substr(2), &used);
  } catch (const std::exception&) {
    throw ParseError("bad board size in '" + spec + "'");
  }
  if (used != spec.size() - 2) throw ParseError("bad board size in '" + spec + "'");
  return make_board(spec[0] == 'A' ? BoardKind::kTypeA : BoardKind::kTypeB, size);
}

}  // namespace tantrix
