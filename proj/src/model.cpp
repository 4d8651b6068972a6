#include "tantrix/model.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tantrix/error.hpp"

namespace tantrix {

std::string VarRef::name() const {
  std::ostringstream os;
  switch (kind) {
    case VarKind::kX: os << "x_" << a << '_' << b << '_' << c; break;
    case VarKind::kY: os << "y_" << a << '_' << b; break;
    case VarKind::kU: os << "u_" << a << '_' << b; break;
  }
  return os.str();
}

std::optional<VarRef> VarRef::from_name(const std::string& name) {
  if (name.size() < 3 || name[1] != '_') return std::nullopt;
  std::vector<int> parts;
  std::istringstream in(name.substr(2));
  for (std::string tok; std::getline(in, tok, '_');) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      return std::nullopt;
    }
    parts.push_back(std::stoi(tok));
  }
  switch (name[0]) {
    case 'x':
      if (parts.size() == 3) return VarRef::x(parts[0], parts[1], parts[2]);
      break;
    case 'y':
      if (parts.size() == 2) return VarRef::y(parts[0], parts[1]);
      break;
    case 'u':
      if (parts.size() == 2) return VarRef::u(parts[0], parts[1]);
      break;
    default: break;
  }
  return std::nullopt;
}

int IntegerProgram::add_var(const VarRef& ref, int lb, int ub) {
  auto [it, fresh] = by_name_.emplace(ref.name(), num_vars());
  if (!fresh) throw std::logic_error("variable " + ref.name() + " declared twice");
  vars_.push_back(ref);
  lb_.push_back(lb);
  ub_.push_back(ub);
  return it->second;
}

int IntegerProgram::find(const VarRef& ref) const {
  auto it = by_name_.find(ref.name());
  return it == by_name_.end() ? -1 : it->second;
}

namespace {

std::vector<Term> normalize(std::vector<Term> terms) {
  std::map<int, std::int64_t> merged;
  for (const auto& t : terms) merged[t.var] += t.coef;
  std::vector<Term> out;
  out.reserve(merged.size());
  for (const auto& [var, coef] : merged) {
    if (coef != 0) out.push_back({coef, var});
  }
  return out;
}

}  // namespace

bool IntegerProgram::add_constraint(LinearConstraint row) {
  if (row.tag.empty()) throw std::logic_error("constraint without a tag");
  if (tags_.count(row.tag)) return false;
  row.terms = normalize(std::move(row.terms));
  for (const auto& t : row.terms) {
    if (t.var < 0 || t.var >= num_vars()) throw std::logic_error("row " + row.tag + " references an undeclared column");
  }
  tags_.emplace(row.tag, static_cast<int>(rows_.size()));
  rows_.push_back(std::move(row));
  return true;
}

bool IntegerProgram::has_family(const std::string& family) const {
  return std::any_of(rows_.begin(), rows_.end(), [&](const LinearConstraint& r) { return r.family() == family; });
}

void IntegerProgram::set_objective(Objective obj) {
  obj.terms = normalize(std::move(obj.terms));
  objective_ = std::move(obj);
}

std::int64_t IntegerProgram::objective_coef(int id) const {
  for (const auto& t : objective_.terms) {
    if (t.var == id) return t.coef;
  }
  return 0;
}

std::vector<std::string> IntegerProgram::violated(const std::vector<int>& values) const {
  std::vector<std::string> out;
  for (const auto& row : rows_) {
    std::int64_t act = 0;
    for (const auto& t : row.terms) act += t.coef * values.at(static_cast<std::size_t>(t.var));
    const bool ok = row.sense == Sense::kLe ? act <= row.rhs : row.sense == Sense::kGe ? act >= row.rhs : act == row.rhs;
    if (!ok) out.push_back(row.tag);
  }
  for (int id = 0; id < num_vars(); ++id) {
    const int v = values.at(static_cast<std::size_t>(id));
    if (v < lower(id) || v > upper(id)) out.push_back("bound:" + vars_[static_cast<std::size_t>(id)].name());
  }
  return out;
}

std::int64_t IntegerProgram::objective_value(const std::vector<int>& values) const {
  std::int64_t v = 0;
  for (const auto& t : objective_.terms) v += t.coef * values.at(static_cast<std::size_t>(t.var));
  return v;
}

// --- TantrixModel ---------------------------------------------------------

namespace {

std::string tag_of(const char* family, std::initializer_list<std::pair<char, int>> idx) {
  std::ostringstream os;
  os << family;
  for (const auto& [c, v] : idx) os << '_' << c << v;
  return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hashed_tag(const char* family, const std::string& key) {
  std::ostringstream os;
  os << family << '_' << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a(key);
  return os.str();
}

}  // namespace

TantrixModel::TantrixModel(int n, Board board, const TileSet& tiles, Color designated)
    : n_(n), board_(std::move(board)), tiles_(tiles), designated_(designated) {
  for (int i = 1; i <= TileSet::kSorts; ++i) {
    if (tile_multiplicity(n_, i) > 0) in_play_.push_back(i);
  }
}

std::vector<Term> TantrixModel::occupancy_terms(int place, std::int64_t coef) const {
  std::vector<Term> out;
  for (int i : in_play_) {
    for (Orientation k = 1; k <= 6; ++k) out.push_back({coef, x(i, place, k)});
  }
  return out;
}

std::vector<Term> TantrixModel::strand_terms(int place, std::pair<Edge, Edge> edges) const {
  if (edges.first > edges.second) std::swap(edges.first, edges.second);
  std::vector<Term> out;
  for (int i : in_play_) {
    for (Orientation k = 1; k <= 6; ++k) {
      if (tiles_.tile(i).oriented_strand(designated_, k) == edges) out.push_back({1, x(i, place, k)});
    }
  }
  return out;
}

void TantrixModel::add_c6(C6Variant variant) {
  if (variant == C6Variant::kNone) return;
  for (const char* fam : {"C6a", "C6b", "C6c"}) {
    if (program_.has_family(fam)) throw DuplicateConstraintFamily(std::string("program already has ") + fam);
  }
  const int s = variant == C6Variant::kA ? 1 : variant == C6Variant::kB ? 2 : 3;
  const char* family = variant == C6Variant::kA ? "C6a" : variant == C6Variant::kB ? "C6b" : "C6c";
  // sum of neighbour occupancy <= s * occupancy(j) + (6 - s)
  for (int j = 1; j <= board_.size(); ++j) {
    LinearConstraint row;
    for (Edge e = 1; e <= 6; ++e) {
      const int nb = board_.adjacent(j, e);
      if (nb == 0) continue;
      auto t = occupancy_terms(nb, 1);
      row.terms.insert(row.terms.end(), t.begin(), t.end());
    }
    auto self = occupancy_terms(j, -s);
    row.terms.insert(row.terms.end(), self.begin(), self.end());
    row.sense = Sense::kLe;
    row.rhs = 6 - s;
    row.tag = tag_of(family, {{'j', j}});
    program_.add_constraint(std::move(row));
  }
}

void TantrixModel::add_pattern_cuts(int length) {
  if (length < 3 || length > 5) throw std::invalid_argument("pattern cut length must be 3, 4 or 5");
  auto add_row = [&](std::string tag, std::vector<std::vector<Term>> groups, std::int64_t rhs) {
    LinearConstraint row;
    for (auto& g : groups) {
      if (g.empty()) return;  // pattern impossible with the tiles in play
      row.terms.insert(row.terms.end(), g.begin(), g.end());
    }
    row.sense = Sense::kLe;
    row.rhs = rhs;
    row.tag = std::move(tag);
    program_.add_constraint(std::move(row));
  };

  for (int j = 1; j <= board_.size(); ++j) {
    if (length == 3 || length == 4) {
      for (Edge l = 1; l <= 3; ++l) {
        const int other = board_.adjacent(j, l);
        if (other == 0) continue;
        if (length == 3) {
          // Two tight turns around the same corner of the shared edge close
          // a three-tile loop with the common neighbour.
          add_row(tag_of("C7", {{'j', j}, {'l', l}, {'v', 0}}),
                  {strand_terms(j, {l, shift_edge(l, 1)}),
                   strand_terms(other, {shift_edge(l, 2), shift_edge(l, 3)})},
                  1);
          add_row(tag_of("C7", {{'j', j}, {'l', l}, {'v', 1}}),
                  {strand_terms(j, {shift_edge(l, -1), l}),
                   strand_terms(other, {shift_edge(l, 3), shift_edge(l, 4)})},
                  1);
        } else {
          // Both strands bend around the shared edge.
          add_row(tag_of("C8", {{'j', j}, {'l', l}}),
                  {strand_terms(j, {shift_edge(l, -1), shift_edge(l, 1)}),
                   strand_terms(other, {shift_edge(l, 2), shift_edge(l, 4)})},
                  1);
        }
      }
    } else {
      for (Edge l = 1; l <= 2; ++l) {
        const std::array<int, 3> tri{j, board_.adjacent(j, l), board_.adjacent(j, l + 1)};
        if (tri[1] == 0 || tri[2] == 0) continue;
        // One cell carries a straight strand parallel to the edge shared by
        // the other two, which both bend around the edge facing it.
        for (int s = 0; s < 3; ++s) {
          std::vector<std::vector<Term>> groups;
          const AxialCoord sc = board_.coord(tri[s]);
          const int p = tri[(s + 1) % 3];
          const int q = tri[(s + 2) % 3];
          Edge ep = *edge_towards(sc, board_.coord(p));
          Edge eq = *edge_towards(sc, board_.coord(q));
          if (shift_edge(ep, 1) != eq) std::swap(ep, eq);
          groups.push_back(strand_terms(tri[s], {shift_edge(eq, 1), shift_edge(ep, -1)}));
          for (int t : {p, q}) {
            const Edge f = *edge_towards(board_.coord(t), sc);
            groups.push_back(strand_terms(t, {shift_edge(f, -1), shift_edge(f, 1)}));
          }
          add_row(tag_of("C9", {{'j', j}, {'l', l}, {'s', s}}), std::move(groups), 2);
        }
      }
    }
  }
}

void TantrixModel::set_objective(ObjectiveKind kind) {
  Objective obj;
  if (kind == ObjectiveKind::kVirtual) {
    obj.sense = ObjectiveSense::kMinimize;
    const int id = x(in_play_.front(), 1, 1);
    obj.terms.push_back({1, id});
  } else {
    obj.sense = ObjectiveSense::kMaximize;
    for (int j = 1; j <= board_.size(); ++j) {
      const int w = -board_.ring(j);
      if (w == 0) continue;
      auto t = occupancy_terms(j, w);
      obj.terms.insert(obj.terms.end(), t.begin(), t.end());
    }
  }
  program_.set_objective(std::move(obj));
}

bool TantrixModel::add_placement_cut(const char* family, std::vector<Placement> placements) {
  if (placements.empty()) throw std::invalid_argument("cut over an empty placement set");
  std::sort(placements.begin(), placements.end());
  placements.erase(std::unique(placements.begin(), placements.end()), placements.end());
  std::ostringstream key;
  LinearConstraint row;
  for (const auto& p : placements) {
    const int id = x(p.tile, p.place, p.orientation);
    if (id < 0) throw std::out_of_range("placement outside the model");
    row.terms.push_back({1, id});
    key << p.place << ',' << p.tile << ',' << p.orientation << ';';
  }
  row.sense = Sense::kLe;
  row.rhs = static_cast<std::int64_t>(placements.size()) - 1;
  row.tag = hashed_tag(family, key.str());
  return program_.add_constraint(std::move(row));
}

bool TantrixModel::add_nogood(const std::vector<Placement>& placements) { return add_placement_cut("NG", placements); }

bool TantrixModel::add_subloop_cut(const std::vector<Placement>& loop) { return add_placement_cut("SL", loop); }

bool TantrixModel::add_hole_cut(const std::vector<int>& rim, const std::vector<int>& cavity) {
  std::vector<int> r = rim, c = cavity;
  std::sort(r.begin(), r.end());
  std::sort(c.begin(), c.end());
  std::ostringstream key;
  LinearConstraint row;
  for (int p : r) {
    auto t = occupancy_terms(p, 1);
    row.terms.insert(row.terms.end(), t.begin(), t.end());
    key << p << ',';
  }
  key << '|';
  for (int p : c) {
    auto t = occupancy_terms(p, -1);
    row.terms.insert(row.terms.end(), t.begin(), t.end());
    key << p << ',';
  }
  row.sense = Sense::kLe;
  row.rhs = static_cast<std::int64_t>(r.size()) - 1;
  row.tag = hashed_tag("HC", key.str());
  return program_.add_constraint(std::move(row));
}

void TantrixModel::forbid_places(const std::vector<int>& places) {
  for (int p : places) {
    for (int i : in_play_) {
      for (Orientation k = 1; k <= 6; ++k) program_.set_upper(x(i, p, k), 0);
    }
  }
}

std::vector<int> TantrixModel::encode(const std::vector<Placement>& placements) const {
  std::vector<int> values(static_cast<std::size_t>(program_.num_vars()), 0);
  std::vector<const Placement*> at(static_cast<std::size_t>(board_.size()) + 1, nullptr);
  for (const auto& p : placements) {
    const int id = x(p.tile, p.place, p.orientation);
    if (id < 0) throw std::out_of_range("placement outside the model");
    values[static_cast<std::size_t>(id)] = 1;
    at[static_cast<std::size_t>(p.place)] = &p;
  }
  for (int id = 0; id < program_.num_vars(); ++id) {
    const VarRef& ref = program_.var(id);
    if (ref.kind == VarKind::kY) {
      if (const Placement* p = at[static_cast<std::size_t>(ref.a)]) {
        values[static_cast<std::size_t>(id)] = oriented_color(tiles_.tile(p->tile), p->orientation, ref.b, designated_);
      }
    } else if (ref.kind == VarKind::kU) {
      values[static_cast<std::size_t>(id)] =
          (at[static_cast<std::size_t>(ref.a)] != nullptr) != (at[static_cast<std::size_t>(ref.b)] != nullptr);
    }
  }
  return values;
}

std::vector<int> TantrixModel::branch_priorities() const {
  std::vector<int> pr(static_cast<std::size_t>(program_.num_vars()), 0);
  for (int id = 0; id < program_.num_vars(); ++id) {
    const VarRef& ref = program_.var(id);
    // Tile placements first, in spiral order from the centre.
    if (ref.kind == VarKind::kX) pr[static_cast<std::size_t>(id)] = board_.size() + 1 - ref.b;
  }
  return pr;
}

TantrixModel build_model(int n, const Board& board, const TileSet& tiles, const ModelOptions& options) {
  if (n < 3) throw std::invalid_argument("challenge number must be at least 3");
  if (board.size() < n) {
    throw BoardTooSmall("board " + board.label() + " cannot hold " + std::to_string(n) + " tiles");
  }
  const Color designated = options.designated.value_or(designated_color(tiles, n));
  TantrixModel model(n, board, tiles, designated);
  IntegerProgram& ip = model.program();
  const int m = board.size();

  // Columns: placements place-major, then edge colors, then the U pairs.
  for (int j = 1; j <= m; ++j) {
    for (int i : model.tiles_in_play()) {
      for (Orientation k = 1; k <= 6; ++k) ip.add_var(VarRef::x(i, j, k), 0, 1);
    }
  }
  for (int j = 1; j <= m; ++j) {
    for (Edge e = 1; e <= 6; ++e) ip.add_var(VarRef::y(j, e), 0, 3);
  }
  for (int j = 1; j <= m; ++j) {
    for (Edge e = 1; e <= 6; ++e) {
      const int o = board.adjacent(j, e);
      if (o > j) ip.add_var(VarRef::u(j, o), 0, 1);
    }
  }

  auto occupancy = [&](int place, std::int64_t coef) {
    std::vector<Term> out;
    for (int i : model.tiles_in_play()) {
      for (Orientation k = 1; k <= 6; ++k) out.push_back({coef, model.x(i, place, k)});
    }
    return out;
  };
  auto concat = [](std::vector<Term> a, const std::vector<Term>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };

  // C1: at most one tile per place.
  for (int j = 1; j <= m; ++j) ip.add_constraint({occupancy(j, 1), Sense::kLe, 1, tag_of("C1", {{'j', j}})});

  // C2: exactly n tiles.
  {
    std::vector<Term> all;
    for (int j = 1; j <= m; ++j) all = concat(std::move(all), occupancy(j, 1));
    ip.add_constraint({std::move(all), Sense::kEq, n, "C2"});
  }

  // C3: per-tile multiplicities.
  for (int i : model.tiles_in_play()) {
    std::vector<Term> terms;
    for (int j = 1; j <= m; ++j) {
      for (Orientation k = 1; k <= 6; ++k) terms.push_back({1, model.x(i, j, k)});
    }
    ip.add_constraint({std::move(terms), Sense::kEq, tile_multiplicity(n, i), tag_of("C3", {{'i', i}})});
  }

  // y_{j,l} = sum c(i,k,l) x_{i,j,k}
  for (int j = 1; j <= m; ++j) {
    for (Edge e = 1; e <= 6; ++e) {
      std::vector<Term> terms{{1, ip.find(VarRef::y(j, e))}};
      for (int i : model.tiles_in_play()) {
        for (Orientation k = 1; k <= 6; ++k) {
          terms.push_back({-oriented_color(tiles.tile(i), k, e, designated), model.x(i, j, k)});
        }
      }
      ip.add_constraint({std::move(terms), Sense::kEq, 0, tag_of("Y", {{'j', j}, {'l', e}})});
    }
  }

  // u_{jj'} = occupancy(j) xor occupancy(j').
  for (int j = 1; j <= m; ++j) {
    for (Edge e = 1; e <= 6; ++e) {
      const int o = board.adjacent(j, e);
      if (o <= j) continue;
      const int u = ip.find(VarRef::u(j, o));
      const std::vector<Term> uj{{1, u}};
      auto tag = [&](const char* fam) { return tag_of(fam, {{'j', j}, {'k', o}}); };
      ip.add_constraint({concat(concat(uj, occupancy(j, 1)), occupancy(o, 1)), Sense::kLe, 2, tag("U1")});
      ip.add_constraint({concat(concat(uj, occupancy(j, -1)), occupancy(o, -1)), Sense::kLe, 0, tag("U2")});
      ip.add_constraint({concat(concat(uj, occupancy(j, -1)), occupancy(o, 1)), Sense::kGe, 0, tag("U3")});
      ip.add_constraint({concat(concat(uj, occupancy(j, 1)), occupancy(o, -1)), Sense::kGe, 0, tag("U4")});
    }
  }

  // C4+C5 on shared edges, C4 alone on the board rim.
  for (int j = 1; j <= m; ++j) {
    for (Edge e = 1; e <= 6; ++e) {
      const int o = board.adjacent(j, e);
      if (o == 0) {
        std::vector<Term> terms;
        for (int i : model.tiles_in_play()) {
          for (Orientation k = 1; k <= 6; ++k) {
            if (oriented_color(tiles.tile(i), k, e, designated) == 3) terms.push_back({1, model.x(i, j, k)});
          }
        }
        ip.add_constraint({std::move(terms), Sense::kEq, 0, tag_of("C4B", {{'j', j}, {'l', e}})});
        continue;
      }
      if (o < j) continue;
      const int y = ip.find(VarRef::y(j, e));
      const int yo = ip.find(VarRef::y(o, opposite_edge(e)));
      const int u = ip.find(VarRef::u(j, o));
      ip.add_constraint({{{1, y}, {-1, yo}, {-2, u}}, Sense::kLe, 0, tag_of("C45a", {{'j', j}, {'l', e}})});
      ip.add_constraint({{{1, y}, {-1, yo}, {2, u}}, Sense::kGe, 0, tag_of("C45b", {{'j', j}, {'l', e}})});
    }
  }

  model.add_c6(options.c6);
  for (int length : options.cuts) model.add_pattern_cuts(length);
  model.set_objective(options.objective);
  return model;
}

}  // namespace tantrix
