#include "catprop/io.hpp"

#include <ostream>

#include "catprop/commitment.hpp"
#include "catprop/errors.hpp"

namespace catprop {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SignedTerm parse_term(std::string_view s) {
  if (s == "A") return kA;
  if (s == "~A") return ~kA;
  if (s == "B") return kB;
  if (s == "~B") return ~kB;
  throw UnknownName("unknown term '" + std::string(s) + "' (expected A, ~A, B or ~B)");
}

ModelUniverse parse_models(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty() || spec == "all16") return all_models();

  std::vector<Constraint> constraints;
  std::vector<RegionModel> explicit_models;
  for (std::string_view item : split(spec, ',')) {
    item = trim(item);
    if (auto m = RegionModel::from_name(item)) {
      explicit_models.push_back(*m);
      continue;
    }
    auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw UnknownName("bad model selector '" + std::string(item) + "'");
    std::string_view kind = item.substr(0, colon);
    SignedTerm t = parse_term(item.substr(colon + 1));
    if (kind == "nonempty") constraints.push_back(nonempty(t));
    else if (kind == "empty") constraints.push_back(empty(t));
    else if (kind == "full") constraints.push_back(full(t));
    else throw UnknownName("unknown constraint '" + std::string(kind) + "'");
  }
  if (!explicit_models.empty() && !constraints.empty())
    throw UnknownName("cannot mix explicit models and constraints");
  if (!explicit_models.empty()) {
    try {
      return ModelUniverse(std::move(explicit_models));
    } catch (const std::invalid_argument& e) {
      throw UnknownName(e.what());
    }
  }
  return restrict(all_models(), constraints);
}

InputSyntax input_syntax_from_name(std::string_view name) {
  if (name == "auto") return InputSyntax::Auto;
  if (name == "name") return InputSyntax::Name;
  if (name == "fol-dsl" || name == "fol") return InputSyntax::FolDsl;
  if (name == "tl") return InputSyntax::Tl;
  throw UnknownName("unknown syntax '" + std::string(name) + "'");
}

NamedFormula read_formula(std::string_view text, InputSyntax syntax) {
  auto from_name = [&] {
    PropositionName n = parse_name(text);
    return NamedFormula{n.to_string(), n.formula()};
  };
  switch (syntax) {
    case InputSyntax::Name:
      return from_name();
    case InputSyntax::FolDsl:
      return {std::string(text), parse_formula(text, Syntax::FolDsl)};
    case InputSyntax::Tl:
      return {std::string(text), parse_formula(text, Syntax::Tl)};
    case InputSyntax::Auto:
      break;
  }
  try {
    return from_name();
  } catch (const UnknownName&) {
  }
  try {
    return {std::string(text), parse_formula(text, Syntax::Tl)};
  } catch (const ParseError&) {
  }
  return {std::string(text), parse_formula(text, Syntax::FolDsl)};
}

json to_json(const ModelUniverse& u) { return u.names(); }

json to_json(const SequentReport& r) {
  json countermodels = json::array();
  for (RegionModel m : r.countermodels) countermodels.push_back(m.name());
  return {
      {"sequent", r.sequent.label},
      {"kind", r.sequent.kind == SequentKind::entails ? "entails" : "incompatible"},
      {"holds", r.holds},
      {"countermodels", countermodels},
  };
}

json to_json(const SquareReport& r) {
  static constexpr const char* kCorners[] = {"U1", "U2", "P1", "P2"};
  json corners = json::object();
  for (int k = 0; k < 4; ++k)
    corners[kCorners[k]] = {{"name", r.labels[k]}, {"bitstring", r.bits[k].to_string()}};
  json checks = json::object();
  for (SquareCheck c : kSquareChecks) checks[std::string(to_string(c))] = r.checks.at(c);
  return {{"corners", corners}, {"checks", checks}, {"valid", r.valid}};
}

json to_json(const Partition& p, const std::vector<NamedFormula>& fs) {
  json cells = json::array();
  const auto models = p.cell_models();
  for (std::size_t c = 0; c < models.size(); ++c) {
    json cell = {{"models", to_json(models[c])}};
    if (!p.anchors.empty()) cell["anchor"] = to_text(p.anchors[c]);
    cells.push_back(cell);
  }
  json bits = json::object();
  for (const NamedFormula& f : fs) bits[f.label] = partition_bitstring(f.formula, p).to_string();
  return {{"cells", cells}, {"bitstrings", bits}};
}

json to_json(const ExtendedProposition& p, const ModelUniverse& u) {
  return {
      {"name", p.name.to_string()},
      {"fol", to_text(p.derived)},
      {"bitstring", bitstring(p.derived, u).to_string()},
  };
}

void write_csv(std::ostream& os, const std::vector<std::string>& labels,
               const RelationMatrix& m) {
  for (const std::string& l : labels) os << ',' << csv_field(l);
  os << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << csv_field(labels[i]);
    for (Relation r : m[i]) os << ',' << to_string(r);
    os << '\n';
  }
}

namespace {

// Edge attributes for an unordered pair, or nullptr for no edge.
const char* edge_style(Relation r) {
  switch (r) {
    case Relation::contradictory: return "style=dashed, dir=none";
    case Relation::contrary: return "style=solid, dir=none";
    case Relation::subcontrary: return "style=dotted, dir=none";
    case Relation::subalternation: return "style=solid";
    case Relation::equivalent: return "style=bold, dir=both";
    default: return nullptr;
  }
}

}  // namespace

void write_dot(std::ostream& os, const std::vector<std::string>& labels,
               const RelationMatrix& m) {
  os << "digraph opposition {\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Relation r = m[i][j];
      std::size_t from = i, to = j;
      if (r == Relation::superalternation) {
        r = Relation::subalternation;
        std::swap(from, to);
      }
      const char* style = edge_style(r);
      if (!style) continue;
      os << "  n" << from << " -> n" << to << " [label=\"" << to_string(r) << "\", "
         << style << "];\n";
    }
  }
  os << "}\n";
}

void write_dot(std::ostream& os, const std::vector<SquareReport>& squares) {
  os << "digraph squares {\n";
  for (std::size_t s = 0; s < squares.size(); ++s) {
    const SquareReport& sq = squares[s];
    const std::string p = "s" + std::to_string(s) + "_";
    os << "  subgraph cluster_" << s << " {\n";
    os << "    label=\"square " << s + 1 << "\";\n";
    for (int k = 0; k < 4; ++k)
      os << "    " << p << k << " [label=" << quoted(sq.labels[k]) << "];\n";
    os << "    " << p << "0 -> " << p << "1 [label=\"contrary\", " << edge_style(Relation::contrary) << "];\n";
    os << "    " << p << "2 -> " << p << "3 [label=\"subcontrary\", " << edge_style(Relation::subcontrary) << "];\n";
    os << "    " << p << "0 -> " << p << "3 [label=\"contradictory\", " << edge_style(Relation::contradictory) << "];\n";
    os << "    " << p << "1 -> " << p << "2 [label=\"contradictory\", " << edge_style(Relation::contradictory) << "];\n";
    os << "    " << p << "0 -> " << p << "2 [label=\"subalternation\", " << edge_style(Relation::subalternation) << "];\n";
    os << "    " << p << "1 -> " << p << "3 [label=\"subalternation\", " << edge_style(Relation::subalternation) << "];\n";
    os << "  }\n";
  }
  os << "}\n";
}

}  // namespace catprop
