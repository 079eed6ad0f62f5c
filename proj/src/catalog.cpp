#include "catprop/catalog.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "catprop/syntax.hpp"

namespace catprop {

std::vector<Formula> aristotelian_set() {
  return {canonical(Letter::A), canonical(Letter::E), canonical(Letter::I),
          canonical(Letter::O)};
}

std::vector<Formula> keynesian_set() {
  return {canonical(Letter::Ap), canonical(Letter::Ep), canonical(Letter::Ip),
          canonical(Letter::Op)};
}

ExtendedProposition ExtendedProposition::from(PropositionName name) {
  Formula f = name.formula();
  return {std::move(name), std::move(f)};
}

Letter ExtendedProposition::effective_letter() const {
  return name.negated ? contradictory(name.core) : name.core;
}

namespace {

std::array<Commitment, 4> claims_about(Pred base) {
  SignedTerm t{base, true};
  return {{{t, ImportMode::Explicit},
           {~t, ImportMode::Explicit},
           {t, ImportMode::Denied},
           {~t, ImportMode::Denied}}};
}

}  // namespace

const std::vector<ExtendedProposition>& family_256() {
  static const std::vector<ExtendedProposition> family = [] {
    std::vector<ExtendedProposition> out;
    out.reserve(256);
    for (Letter core : kAllLetters)
      for (Commitment a : claims_about(Pred::A))
        for (Commitment b : claims_about(Pred::B))
          out.push_back(ExtendedProposition::from({core, {a, b}, false}));
    for (std::size_t k = 0; k < 128; ++k) {
      PropositionName name = out[k].name;
      name.negated = true;
      out.push_back({name, negate(out[k].derived)});
    }
    return out;
  }();
  return family;
}

std::vector<ExtendedProposition> single_commitment_forms() {
  std::vector<ExtendedProposition> out;
  const SignedTerm terms[] = {kA, ~kA, kB, ~kB};
  for (Letter core : kAllLetters)
    for (SignedTerm t : terms)
      for (ImportMode mode : {ImportMode::Explicit, ImportMode::Implicit})
        out.push_back(ExtendedProposition::from({core, {{t, mode}}, false}));
  return out;
}

std::string_view to_string(SquareCheck c) {
  switch (c) {
    case SquareCheck::contrary_top: return "contrary(U1,U2)";
    case SquareCheck::contradictory_left: return "contradictory(U1,P2)";
    case SquareCheck::contradictory_right: return "contradictory(U2,P1)";
    case SquareCheck::subcontrary_bottom: return "subcontrary(P1,P2)";
    case SquareCheck::subalternation_left: return "subalternation(U1,P1)";
    case SquareCheck::subalternation_right: return "subalternation(U2,P2)";
  }
  return "?";
}

namespace {

SquareReport check_square(std::array<Bitstring, 4> bits) {
  const auto& [u1, u2, p1, p2] = bits;
  SquareReport r;
  r.checks[SquareCheck::contrary_top] = relate(u1, u2) == Relation::contrary;
  r.checks[SquareCheck::contradictory_left] = relate(u1, p2) == Relation::contradictory;
  r.checks[SquareCheck::contradictory_right] = relate(u2, p1) == Relation::contradictory;
  r.checks[SquareCheck::subcontrary_bottom] = relate(p1, p2) == Relation::subcontrary;
  r.checks[SquareCheck::subalternation_left] = relate(u1, p1) == Relation::subalternation;
  r.checks[SquareCheck::subalternation_right] = relate(u2, p2) == Relation::subalternation;
  r.valid = true;
  for (const auto& [check, ok] : r.checks) r.valid = r.valid && ok;
  r.bits = std::move(bits);
  return r;
}

}  // namespace

SquareReport is_valid_square(const Formula& u1, const Formula& u2, const Formula& p1,
                             const Formula& p2, const ModelUniverse& u) {
  SquareReport r =
      check_square({bitstring(u1, u), bitstring(u2, u), bitstring(p1, u), bitstring(p2, u)});
  r.labels = {to_text(u1), to_text(u2), to_text(p1), to_text(p2)};
  return r;
}

std::vector<SquareReport> enumerate_squares(const std::vector<ExtendedProposition>& pool,
                                            const ModelUniverse& u, SquareForm form) {
  // Pool members grouped by bitstring, groups in order of first member.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<Bitstring> bits;
  std::unordered_map<std::string, std::size_t> group_of;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    Bitstring b = bitstring(pool[i].derived, u);
    auto [it, inserted] = group_of.try_emplace(b.to_string(), groups.size());
    if (inserted) {
      groups.emplace_back();
      bits.push_back(std::move(b));
    }
    groups[it->second].push_back(i);
  }

  // First member of group g fitting the corner, if any.
  auto pick = [&](std::size_t g, bool universal, bool affirmative) -> std::optional<std::size_t> {
    for (std::size_t i : groups[g]) {
      if (form == SquareForm::relational) return i;
      Letter l = pool[i].effective_letter();
      if (is_universal(l) == universal && is_affirmative(l) == affirmative) return i;
    }
    return std::nullopt;
  };

  std::vector<std::pair<std::array<std::size_t, 4>, SquareReport>> found;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (relate(bits[i], bits[j]) != Relation::contrary) continue;
      // The particulars are fixed as the contradictories of the universals.
      auto ni = group_of.find((~bits[i]).to_string());
      auto nj = group_of.find((~bits[j]).to_string());
      if (ni == group_of.end() || nj == group_of.end()) continue;
      if (!check_square({bits[i], bits[j], bits[nj->second], bits[ni->second]}).valid) continue;

      // Orientation with U1 = group a, U2 = group b.
      auto orient = [&](std::size_t a, std::size_t b, std::size_t na,
                        std::size_t nb) -> std::optional<std::array<std::size_t, 4>> {
        auto u1 = pick(a, true, true), u2 = pick(b, true, false);
        auto p1 = pick(nb, false, true), p2 = pick(na, false, false);
        if (!u1 || !u2 || !p1 || !p2) return std::nullopt;
        return std::array<std::size_t, 4>{*u1, *u2, *p1, *p2};
      };
      auto corners = orient(i, j, ni->second, nj->second);
      if (!corners) corners = orient(j, i, nj->second, ni->second);
      if (!corners) continue;

      const auto& c = *corners;
      SquareReport r = check_square({bitstring(pool[c[0]].derived, u), bitstring(pool[c[1]].derived, u),
                                     bitstring(pool[c[2]].derived, u), bitstring(pool[c[3]].derived, u)});
      for (int k = 0; k < 4; ++k) r.labels[k] = pool[c[k]].name.to_string();
      found.emplace_back(c, std::move(r));
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SquareReport> out;
  out.reserve(found.size());
  for (auto& [key, r] : found) out.push_back(std::move(r));
  return out;
}

const std::vector<NamedSquare>& reference_squares() {
  static const std::vector<NamedSquare> squares{
      {"S1", {"A[A!]", "E[A!]", "I[A?]", "O[A?]"}},
      {"S2", {"A[A!]", "E[A?]", "I[A!]", "O[A?]"}},
      {"S3", {"A[A?]", "E[A!]", "I[A?]", "O[A!]"}},
      {"S1'", {"A'[~A!]", "E'[~A!]", "I'[~A?]", "O'[~A?]"}},
      {"S2'", {"A'[~A!]", "E'[~A?]", "I'[~A!]", "O'[~A?]"}},
      {"S3'", {"A'[~A?]", "E'[~A!]", "I'[~A?]", "O'[~A!]"}},
  };
  return squares;
}

}  // namespace catprop
