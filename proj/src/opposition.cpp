#include "catprop/opposition.hpp"

#include <array>
#include <map>

#include "catprop/errors.hpp"

namespace catprop {

namespace {

constexpr std::array<std::pair<Relation, std::string_view>, 8> kRelationNames{{
    {Relation::equivalent, "equivalent"},
    {Relation::contradictory, "contradictory"},
    {Relation::contrary, "contrary"},
    {Relation::subcontrary, "subcontrary"},
    {Relation::subalternation, "subalternation"},
    {Relation::superalternation, "superalternation"},
    {Relation::unconnected, "unconnected"},
    {Relation::degenerate, "degenerate"},
}};

void check_lengths(const Bitstring& b1, const Bitstring& b2) {
  if (b1.size() != b2.size())
    throw LengthMismatch("bitstrings over different universes (" +
                         std::to_string(b1.size()) + " vs " + std::to_string(b2.size()) +
                         " bits)");
}

}  // namespace

std::string_view to_string(Relation r) {
  for (const auto& [rel, name] : kRelationNames)
    if (rel == r) return name;
  return "?";
}

std::optional<Relation> relation_from_name(std::string_view name) {
  for (const auto& [rel, n] : kRelationNames)
    if (n == name) return rel;
  return std::nullopt;
}

Relation converse(Relation r) {
  if (r == Relation::subalternation) return Relation::superalternation;
  if (r == Relation::superalternation) return Relation::subalternation;
  return r;
}

Relation relate(const Bitstring& b1, const Bitstring& b2) {
  check_lengths(b1, b2);
  if (b1.empty()) return Relation::degenerate;
  if (b1 == b2) return Relation::equivalent;
  if (b1.all() || b1.none() || b2.all() || b2.none()) return Relation::degenerate;

  const Bitstring both = b1 & b2;
  const Bitstring either = b1 | b2;
  const bool disjoint = both.none();
  const bool exhaustive = either.all();
  if (disjoint && exhaustive) return Relation::contradictory;
  if (disjoint) return Relation::contrary;
  if (exhaustive) return Relation::subcontrary;
  if (both == b1) return Relation::subalternation;
  if (both == b2) return Relation::superalternation;
  return Relation::unconnected;
}

bool entails(const Bitstring& b1, const Bitstring& b2) {
  check_lengths(b1, b2);
  return (b1 & b2) == b1;
}

bool incompatible(const Bitstring& b1, const Bitstring& b2) {
  check_lengths(b1, b2);
  return (b1 & b2).none();
}

std::vector<ModelUniverse> Partition::cell_models() const {
  std::vector<ModelUniverse> out;
  for (const auto& cell : cells) {
    std::vector<RegionModel> ms;
    for (std::size_t i : cell) ms.push_back(universe[i]);
    out.emplace_back(std::move(ms));
  }
  return out;
}

Partition signature_partition(const std::vector<Formula>& fs, const ModelUniverse& u,
                              const std::vector<Formula>& anchors) {
  if (u.empty()) throw EmptyUniverse("cannot partition an empty universe");

  Partition p{u, {}, {}};
  std::map<std::vector<bool>, std::size_t> cell_of;
  for (std::size_t k = 0; k < u.size(); ++k) {
    std::vector<bool> signature;
    signature.reserve(fs.size());
    for (const Formula& f : fs) signature.push_back(evaluate(f, u[k]));
    auto [it, inserted] = cell_of.try_emplace(std::move(signature), p.cells.size());
    if (inserted) p.cells.emplace_back();
    p.cells[it->second].push_back(k);
  }
  if (anchors.empty()) return p;

  if (anchors.size() != p.cells.size())
    throw AnchorMismatch(std::to_string(anchors.size()) + " anchors for " +
                         std::to_string(p.cells.size()) + " cells");
  std::vector<std::vector<std::size_t>> ordered;
  for (const Formula& anchor : anchors) {
    const Bitstring bits = bitstring(anchor, u);
    std::optional<std::size_t> match;
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      Bitstring mask(u.size());
      for (std::size_t i : p.cells[c]) mask.set(i, true);
      if (mask == bits) match = c;
    }
    if (!match)
      throw AnchorMismatch("anchor does not pick out exactly one cell");
    ordered.push_back(p.cells[*match]);
  }
  p.cells = std::move(ordered);
  p.anchors = anchors;
  return p;
}

Bitstring partition_bitstring(const Formula& f, const Partition& p) {
  Bitstring out(p.cells.size());
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    const auto& cell = p.cells[c];
    const bool value = evaluate(f, p.universe[cell.front()]);
    for (std::size_t i : cell)
      if (evaluate(f, p.universe[i]) != value)
        throw NotCellConstant("formula is not constant on cell " + std::to_string(c + 1));
    out.set(c, value);
  }
  return out;
}

RelationMatrix relation_table(const std::vector<Formula>& fs, const ModelUniverse& u) {
  if (u.empty()) throw EmptyUniverse("relation table over an empty universe");
  std::vector<Bitstring> bits;
  bits.reserve(fs.size());
  for (const Formula& f : fs) bits.push_back(bitstring(f, u));
  RelationMatrix m(fs.size(), std::vector<Relation>(fs.size()));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j) m[i][j] = relate(bits[i], bits[j]);
  return m;
}

bool has_import(const Formula& f, SignedTerm t, const ModelUniverse& u) {
  return entails(bitstring(f, u), bitstring(ex(t), u));
}

std::vector<SequentReport> verify_sequents(const std::vector<SequentSpec>& list,
                                           const ModelUniverse& u) {
  std::vector<SequentReport> out;
  out.reserve(list.size());
  for (const SequentSpec& s : list) {
    const Bitstring premise = bitstring(s.premise, u);
    Bitstring conclusion = bitstring(s.conclusion, u);
    // P incompatible with Q is P entails not-Q.
    if (s.kind == SequentKind::incompatible) conclusion = ~conclusion;
    SequentReport report{s, true, {}};
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (premise[k] && !conclusion[k]) report.countermodels.push_back(u[k]);
    }
    report.holds = report.countermodels.empty();
    out.push_back(std::move(report));
  }
  return out;
}

namespace {

struct Literal {
  Letter letter;
  bool negated;
};

std::vector<SequentSpec> square_sequents(Letter a, Letter e, Letter i, Letter o) {
  const Literal list[][2] = {
      {{a, false}, {e, true}},  {{a, false}, {o, true}},  {{a, true}, {o, false}},
      {{a, false}, {i, false}}, {{e, false}, {a, true}},  {{e, false}, {i, true}},
      {{e, true}, {i, false}},  {{e, false}, {o, false}}, {{i, false}, {e, true}},
      {{i, true}, {a, true}},   {{i, true}, {e, false}},  {{i, true}, {o, false}},
      {{o, false}, {a, true}},  {{o, true}, {i, false}},
  };
  auto text = [](Literal l) {
    return (l.negated ? std::string("¬") : std::string()) + std::string(letter_name(l.letter));
  };
  auto formula = [](Literal l) {
    Formula f = canonical(l.letter);
    return l.negated ? negate(f) : f;
  };
  std::vector<SequentSpec> out;
  for (const auto& [lhs, rhs] : list)
    out.push_back({text(lhs) + " ⊢ " + text(rhs), formula(lhs), formula(rhs),
                   SequentKind::entails});
  return out;
}

}  // namespace

std::vector<SequentSpec> aristotelian_sequents() {
  return square_sequents(Letter::A, Letter::E, Letter::I, Letter::O);
}

std::vector<SequentSpec> keynesian_sequents() {
  return square_sequents(Letter::Ap, Letter::Ep, Letter::Ip, Letter::Op);
}

}  // namespace catprop
