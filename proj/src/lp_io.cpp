#include "tantrix/lp_io.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "tantrix/error.hpp"

namespace tantrix {

namespace {

constexpr int kTermsPerLine = 8;

void write_terms(std::ostringstream& os, const IntegerProgram& ip, const std::vector<Term>& terms) {
  int on_line = 0;
  for (const auto& t : terms) {
    if (on_line == kTermsPerLine) {
      os << "\n  ";
      on_line = 0;
    }
    os << ' ' << (t.coef < 0 ? '-' : '+') << ' ' << (t.coef < 0 ? -t.coef : t.coef) << ' ' << ip.var(t.var).name();
    ++on_line;
  }
}

const char* sense_op(Sense s) {
  switch (s) {
    case Sense::kLe: return "<=";
    case Sense::kGe: return ">=";
    case Sense::kEq: return "=";
  }
  return "?";
}

bool is_binary(const IntegerProgram& ip, int id) { return ip.lower(id) == 0 && ip.upper(id) == 1; }

}  // namespace

std::string export_lp(const IntegerProgram& ip) {
  std::ostringstream os;
  os << "\\ tantrix integer program\n";
  os << (ip.objective().sense == ObjectiveSense::kMaximize ? "Maximize\n" : "Minimize\n");
  os << " obj:";
  write_terms(os, ip, ip.objective().terms);
  os << "\nSubject To\n";
  for (const auto& row : ip.constraints()) {
    os << ' ' << row.tag << ':';
    write_terms(os, ip, row.terms);
    os << ' ' << sense_op(row.sense) << ' ' << row.rhs << '\n';
  }
  os << "Bounds\n";
  for (int id = 0; id < ip.num_vars(); ++id) {
    os << ' ' << ip.lower(id) << " <= " << ip.var(id).name() << " <= " << ip.upper(id) << '\n';
  }
  os << "Binaries\n";
  for (int id = 0; id < ip.num_vars(); ++id) {
    if (is_binary(ip, id)) os << ' ' << ip.var(id).name() << '\n';
  }
  os << "Generals\n";
  for (int id = 0; id < ip.num_vars(); ++id) {
    if (!is_binary(ip, id)) os << ' ' << ip.var(id).name() << '\n';
  }
  os << "End\n";
  return os.str();
}

std::string export_mps(const IntegerProgram& ip) {
  std::ostringstream os;
  os << "NAME tantrix\n";
  os << "OBJSENSE\n    " << (ip.objective().sense == ObjectiveSense::kMaximize ? "MAX" : "MIN") << '\n';
  os << "ROWS\n N  obj\n";
  for (const auto& row : ip.constraints()) {
    os << ' ' << (row.sense == Sense::kLe ? 'L' : row.sense == Sense::kGe ? 'G' : 'E') << "  " << row.tag << '\n';
  }
  // Column-major entries.
  std::vector<std::vector<std::pair<int, std::int64_t>>> cols(static_cast<std::size_t>(ip.num_vars()));
  for (const auto& t : ip.objective().terms) cols[static_cast<std::size_t>(t.var)].push_back({-1, t.coef});
  for (std::size_t r = 0; r < ip.constraints().size(); ++r) {
    for (const auto& t : ip.constraints()[r].terms) {
      cols[static_cast<std::size_t>(t.var)].push_back({static_cast<int>(r), t.coef});
    }
  }
  os << "COLUMNS\n    MARKER  'MARKER'  'INTORG'\n";
  for (int id = 0; id < ip.num_vars(); ++id) {
    const auto& name = ip.var(id).name();
    const auto& entries = cols[static_cast<std::size_t>(id)];
    if (entries.empty()) os << "    " << name << "  obj  0\n";
    for (const auto& [r, coef] : entries) {
      os << "    " << name << "  " << (r < 0 ? std::string("obj") : ip.constraints()[static_cast<std::size_t>(r)].tag)
         << "  " << coef << '\n';
    }
  }
  os << "    MARKER  'MARKER'  'INTEND'\n";
  os << "RHS\n";
  for (const auto& row : ip.constraints()) {
    if (row.rhs != 0) os << "    RHS  " << row.tag << "  " << row.rhs << '\n';
  }
  os << "BOUNDS\n";
  for (int id = 0; id < ip.num_vars(); ++id) {
    const auto& name = ip.var(id).name();
    if (is_binary(ip, id)) {
      os << " BV BND  " << name << '\n';
    } else if (ip.lower(id) == ip.upper(id)) {
      os << " FX BND  " << name << "  " << ip.lower(id) << '\n';
    } else {
      os << " LI BND  " << name << "  " << ip.lower(id) << '\n';
      os << " UI BND  " << name << "  " << ip.upper(id) << '\n';
    }
  }
  os << "ENDATA\n";
  return os.str();
}

std::string export_program(const IntegerProgram& program, ExportFormat format) {
  return format == ExportFormat::kLp ? export_lp(program) : export_mps(program);
}

namespace {

std::int64_t parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'");
  }
}

VarRef parse_var_name(const std::string& name) {
  auto ref = VarRef::from_name(name);
  if (!ref) throw ParseError("unrecognised column name '" + name + "'");
  return *ref;
}

// Pending rows keep column names until all columns are declared.
struct NamedTerm {
  std::int64_t coef;
  std::string name;
};

struct PendingRow {
  std::string tag;
  std::vector<NamedTerm> terms;
  Sense sense = Sense::kLe;
  std::int64_t rhs = 0;
};

std::vector<Term> resolve(const IntegerProgram& ip, const std::vector<NamedTerm>& terms) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    const int id = ip.find(parse_var_name(t.name));
    if (id < 0) throw ParseError("column '" + t.name + "' has no bounds declaration");
    out.push_back({t.coef, id});
  }
  return out;
}

bool is_section(const std::string& tok) {
  return tok == "Subject" || tok == "Bounds" || tok == "Binaries" || tok == "Generals" || tok == "End";
}

}  // namespace

IntegerProgram parse_lp(std::string_view text) {
  std::vector<std::string> toks;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (auto bs = line.find('\\'); bs != std::string::npos) line.erase(bs);
      std::istringstream ls(line);
      for (std::string t; ls >> t;) toks.push_back(t);
    }
  }
  std::size_t pos = 0;
  auto peek = [&]() -> const std::string& {
    static const std::string eof;
    return pos < toks.size() ? toks[pos] : eof;
  };
  auto next = [&]() -> std::string {
    if (pos >= toks.size()) throw ParseError("unexpected end of LP text");
    return toks[pos++];
  };
  auto read_terms = [&](std::vector<NamedTerm>& out) {
    while (pos < toks.size()) {
      const std::string& t = peek();
      if (t == "+" || t == "-") {
        const bool neg = next() == "-";
        std::string coef_or_name = next();
        std::int64_t coef = 1;
        std::string name = coef_or_name;
        if (!coef_or_name.empty() && std::isdigit(static_cast<unsigned char>(coef_or_name[0]))) {
          coef = parse_int(coef_or_name, "coefficient");
          name = next();
        }
        out.push_back({neg ? -coef : coef, name});
      } else if (t == "<=" || t == ">=" || t == "=" || is_section(t) || t.back() == ':') {
        return;
      } else {
        throw ParseError("unexpected token '" + t + "' in LP expression");
      }
    }
  };

  Objective obj;
  const std::string sense = next();
  if (sense == "Maximize") {
    obj.sense = ObjectiveSense::kMaximize;
  } else if (sense == "Minimize") {
    obj.sense = ObjectiveSense::kMinimize;
  } else {
    throw ParseError("LP text must start with Minimize or Maximize");
  }
  std::vector<NamedTerm> obj_terms;
  if (peek() == "obj:") {
    next();
    read_terms(obj_terms);
  }
  if (next() != "Subject" || next() != "To") throw ParseError("missing 'Subject To'");
  std::vector<PendingRow> rows;
  while (pos < toks.size() && !is_section(peek())) {
    PendingRow row;
    std::string tag = next();
    if (tag.size() < 2 || tag.back() != ':') throw ParseError("constraint must start with 'name:', got '" + tag + "'");
    tag.pop_back();
    row.tag = tag;
    read_terms(row.terms);
    const std::string op = next();
    if (op == "<=") {
      row.sense = Sense::kLe;
    } else if (op == ">=") {
      row.sense = Sense::kGe;
    } else if (op == "=") {
      row.sense = Sense::kEq;
    } else {
      throw ParseError("bad relational operator '" + op + "' in row " + tag);
    }
    row.rhs = parse_int(next(), "right-hand side");
    rows.push_back(std::move(row));
  }

  IntegerProgram ip;
  std::map<std::string, bool> integral;
  while (pos < toks.size()) {
    const std::string section = next();
    if (section == "End") break;
    if (section == "Bounds") {
      while (pos < toks.size() && !is_section(peek())) {
        const auto lb = parse_int(next(), "lower bound");
        if (next() != "<=") throw ParseError("bounds must read 'lb <= name <= ub'");
        const std::string name = next();
        if (next() != "<=") throw ParseError("bounds must read 'lb <= name <= ub'");
        const auto ub = parse_int(next(), "upper bound");
        ip.add_var(parse_var_name(name), static_cast<int>(lb), static_cast<int>(ub));
      }
    } else if (section == "Binaries" || section == "Generals") {
      while (pos < toks.size() && !is_section(peek())) {
        const std::string name = next();
        const int id = ip.find(parse_var_name(name));
        if (id < 0) throw ParseError("integer column '" + name + "' has no bounds declaration");
        if (section == "Binaries" && (ip.lower(id) != 0 || ip.upper(id) != 1)) {
          throw ParseError("binary column '" + name + "' has non-binary bounds");
        }
        integral[name] = true;
      }
    } else {
      throw ParseError("unknown LP section '" + section + "'");
    }
  }
  for (int id = 0; id < ip.num_vars(); ++id) {
    if (!integral.count(ip.var(id).name())) throw ParseError("column '" + ip.var(id).name() + "' is not integral");
  }
  ip.set_objective({obj.sense, resolve(ip, obj_terms)});
  for (auto& row : rows) {
    if (!ip.add_constraint({resolve(ip, row.terms), row.sense, row.rhs, row.tag})) {
      throw ParseError("duplicate row name '" + row.tag + "'");
    }
  }
  return ip;
}

IntegerProgram parse_mps(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::string section;
  Objective obj;
  std::vector<PendingRow> rows;
  std::map<std::string, std::size_t> row_index;
  std::vector<std::string> col_order;
  std::map<std::string, std::pair<std::int64_t, std::int64_t>> bounds;
  std::vector<NamedTerm> obj_terms;
  bool in_int_block = false;
  bool saw_end = false;

  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '*') continue;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (line[0] != ' ') {
      section = tok[0];
      if (section == "ENDATA") {
        saw_end = true;
        break;
      }
      if (section != "NAME" && section != "OBJSENSE" && section != "ROWS" && section != "COLUMNS" && section != "RHS" &&
          section != "BOUNDS") {
        throw ParseError("unknown MPS section '" + section + "'");
      }
      continue;
    }
    if (section == "OBJSENSE") {
      if (tok[0] == "MAX") {
        obj.sense = ObjectiveSense::kMaximize;
      } else if (tok[0] == "MIN") {
        obj.sense = ObjectiveSense::kMinimize;
      } else {
        throw ParseError("bad OBJSENSE '" + tok[0] + "'");
      }
    } else if (section == "ROWS") {
      if (tok.size() != 2) throw ParseError("ROWS entries need a type and a name");
      if (tok[0] == "N") continue;
      PendingRow row;
      row.tag = tok[1];
      if (tok[0] == "L") {
        row.sense = Sense::kLe;
      } else if (tok[0] == "G") {
        row.sense = Sense::kGe;
      } else if (tok[0] == "E") {
        row.sense = Sense::kEq;
      } else {
        throw ParseError("bad row type '" + tok[0] + "'");
      }
      if (!row_index.emplace(row.tag, rows.size()).second) throw ParseError("duplicate row name '" + row.tag + "'");
      rows.push_back(std::move(row));
    } else if (section == "COLUMNS") {
      if (tok.size() == 3 && tok[1] == "'MARKER'") {
        in_int_block = tok[2] == "'INTORG'";
        continue;
      }
      if (!in_int_block) throw ParseError("continuous column '" + tok[0] + "' is not supported");
      if (tok.size() != 3) throw ParseError("COLUMNS entries need column, row and value");
      if (col_order.empty() || col_order.back() != tok[0]) col_order.push_back(tok[0]);
      const auto coef = parse_int(tok[2], "coefficient");
      if (tok[1] == "obj") {
        obj_terms.push_back({coef, tok[0]});
      } else {
        auto it = row_index.find(tok[1]);
        if (it == row_index.end()) throw ParseError("unknown row '" + tok[1] + "'");
        rows[it->second].terms.push_back({coef, tok[0]});
      }
    } else if (section == "RHS") {
      if (tok.size() != 3) throw ParseError("RHS entries need set, row and value");
      auto it = row_index.find(tok[1]);
      if (it == row_index.end()) throw ParseError("unknown row '" + tok[1] + "' in RHS");
      rows[it->second].rhs = parse_int(tok[2], "right-hand side");
    } else if (section == "BOUNDS") {
      if (tok.size() < 3) throw ParseError("short BOUNDS entry");
      auto& b = bounds.try_emplace(tok[2], std::pair<std::int64_t, std::int64_t>{0, 0}).first->second;
      if (tok[0] == "BV") {
        b = {0, 1};
      } else if (tok.size() != 4) {
        throw ParseError("bound '" + tok[0] + "' needs a value");
      } else if (tok[0] == "LI") {
        b.first = parse_int(tok[3], "bound");
      } else if (tok[0] == "UI") {
        b.second = parse_int(tok[3], "bound");
      } else if (tok[0] == "FX") {
        b.first = b.second = parse_int(tok[3], "bound");
      } else {
        throw ParseError("unsupported bound type '" + tok[0] + "'");
      }
    } else {
      throw ParseError("data outside a known MPS section");
    }
  }
  if (!saw_end) throw ParseError("missing ENDATA");

  IntegerProgram ip;
  for (const auto& name : col_order) {
    auto it = bounds.find(name);
    if (it == bounds.end()) throw ParseError("column '" + name + "' has no bounds");
    ip.add_var(parse_var_name(name), static_cast<int>(it->second.first), static_cast<int>(it->second.second));
  }
  ip.set_objective({obj.sense, resolve(ip, obj_terms)});
  for (auto& row : rows) ip.add_constraint({resolve(ip, row.terms), row.sense, row.rhs, row.tag});
  return ip;
}

IntegerProgram parse_program(std::string_view text, ExportFormat format) {
  return format == ExportFormat::kLp ? parse_lp(text) : parse_mps(text);
}

}  // namespace tantrix
