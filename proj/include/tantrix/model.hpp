#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tantrix/hexboard.hpp"
#include "tantrix/tiles.hpp"

namespace tantrix {

enum class VarKind { kX, kY, kU };

// X(tile, place, orientation), Y(place, edge), U(place, place') with place < place'.
struct VarRef {
  VarKind kind = VarKind::kX;
  int a = 0;
  int b = 0;
  int c = 0;

  static VarRef x(int tile, int place, Orientation k) { return {VarKind::kX, tile, place, k}; }
  static VarRef y(int place, Edge e) { return {VarKind::kY, place, e, 0}; }
  static VarRef u(int place, int other) { return {VarKind::kU, place, other, 0}; }

  std::string name() const;
  static std::optional<VarRef> from_name(const std::string& name);
  friend bool operator==(const VarRef&, const VarRef&) = default;
};

struct Term {
  std::int64_t coef = 0;
  int var = 0;  // column id
  friend bool operator==(const Term&, const Term&) = default;
};

enum class Sense { kLe, kEq, kGe };
enum class ObjectiveSense { kMinimize, kMaximize };

struct LinearConstraint {
  std::vector<Term> terms;  // sorted by column id, no zero coefficients
  Sense sense = Sense::kLe;
  std::int64_t rhs = 0;
  std::string tag;  // family prefix, then indices: "C3_i2", "C45a_j4_l6"

  std::string family() const { return tag.substr(0, tag.find('_')); }
};

struct Objective {
  ObjectiveSense sense = ObjectiveSense::kMinimize;
  std::vector<Term> terms;
};

// Pure integer linear program over bounded integer columns.
class IntegerProgram {
 public:
  int add_var(const VarRef& ref, int lb, int ub);
  int num_vars() const { return static_cast<int>(vars_.size()); }
  const VarRef& var(int id) const { return vars_.at(static_cast<std::size_t>(id)); }
  int lower(int id) const { return lb_.at(static_cast<std::size_t>(id)); }
  int upper(int id) const { return ub_.at(static_cast<std::size_t>(id)); }
  void set_upper(int id, int ub) { ub_.at(static_cast<std::size_t>(id)) = ub; }
  // Column id of a variable, -1 when absent.
  int find(const VarRef& ref) const;

  // Normalizes the terms (merge duplicates, drop zeros, sort by column) and
  // appends the row. Returns false, leaving the program unchanged, when a row
  // with the same tag already exists.
  bool add_constraint(LinearConstraint row);
  const std::vector<LinearConstraint>& constraints() const { return rows_; }
  bool has_tag(const std::string& tag) const { return tags_.count(tag) != 0; }
  bool has_family(const std::string& family) const;

  void set_objective(Objective obj);
  const Objective& objective() const { return objective_; }
  std::int64_t objective_coef(int id) const;

  // Evaluates all rows; returns tags of the violated ones.
  std::vector<std::string> violated(const std::vector<int>& values) const;
  std::int64_t objective_value(const std::vector<int>& values) const;

 private:
  std::vector<VarRef> vars_;
  std::vector<int> lb_, ub_;
  std::unordered_map<std::string, int> by_name_;
  std::vector<LinearConstraint> rows_;
  std::unordered_map<std::string, int> tags_;
  Objective objective_;
};

enum class C6Variant { kNone, kA, kB, kC };
enum class ObjectiveKind { kVirtual, kWeighted };

struct ModelOptions {
  C6Variant c6 = C6Variant::kNone;
  std::set<int> cuts;  // subset of {3, 4, 5}
  ObjectiveKind objective = ObjectiveKind::kVirtual;
  // Overrides the challenge number's designated color; used to exercise the
  // blue and yellow pattern families.
  std::optional<Color> designated;
};

// A compiled challenge: the program plus what is needed to read it back.
class TantrixModel {
 public:
  TantrixModel(int n, Board board, const TileSet& tiles, Color designated);

  int n() const { return n_; }
  const Board& board() const { return board_; }
  const TileSet& tiles() const { return tiles_; }
  Color designated() const { return designated_; }
  IntegerProgram& program() { return program_; }
  const IntegerProgram& program() const { return program_; }

  // Column of x_{i,j,k}, -1 if that tile is not in play.
  int x(int tile, int place, Orientation k) const { return program_.find(VarRef::x(tile, place, k)); }
  // Tiles with nonzero multiplicity, ascending.
  const std::vector<int>& tiles_in_play() const { return in_play_; }

  void add_c6(C6Variant variant);
  void add_pattern_cuts(int length);
  void set_objective(ObjectiveKind kind);
  // sum x over the placements <= |placements| - 1. Returns false if an
  // identical cut is already present.
  bool add_nogood(const std::vector<Placement>& placements);
  bool add_subloop_cut(const std::vector<Placement>& loop);
  // Excludes every arrangement in which all `rim` places are occupied while
  // all `cavity` places stay empty.
  bool add_hole_cut(const std::vector<int>& rim, const std::vector<int>& cavity);
  // Forces the given places to stay empty.
  void forbid_places(const std::vector<int>& places);

  // Full column assignment for the given placements: x from the list, y
  // from the oriented colours, u from occupancy. Throws std::out_of_range
  // for a placement the model has no column for.
  std::vector<int> encode(const std::vector<Placement>& placements) const;

  // Branching priority per column: tile placements first, centre outwards.
  std::vector<int> branch_priorities() const;

 private:
  bool add_placement_cut(const char* family, std::vector<Placement> placements);
  std::vector<Term> occupancy_terms(int place, std::int64_t coef) const;
  std::vector<Term> strand_terms(int place, std::pair<Edge, Edge> edges) const;

  int n_;
  Board board_;
  TileSet tiles_;
  Color designated_;
  std::vector<int> in_play_;
  IntegerProgram program_;
};

// C1-C5 with Y definitions, U linking and the boundary rule, plus the
// optional families in `options`. Throws BoardTooSmall when n > board size.
TantrixModel build_model(int n, const Board& board, const TileSet& tiles, const ModelOptions& options);

}  // namespace tantrix
