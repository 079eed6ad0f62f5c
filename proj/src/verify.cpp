#include "catprop/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "catprop/catalog.hpp"
#include "catprop/commitment.hpp"
#include "catprop/errors.hpp"

namespace catprop {

namespace {

class Report {
 public:
  // `fn` returns an empty string on success, otherwise the failure detail.
  void check(std::string id, std::string description, const std::function<std::string()>& fn) {
    CheckResult r{std::move(id), std::move(description), false, {}};
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  if (got == want) return {};
  return what + ": got " + got + ", expected " + want;
}

Formula F(Letter l) { return canonical(l); }

using enum Letter;

const ModelUniverse& normal_universe() {
  static const ModelUniverse u =
      restrict(all_models(), {nonempty(kA), nonempty(~kA), nonempty(kB), nonempty(~kB)});
  return u;
}

std::string check_partition(const std::vector<Letter>& letters, const ModelUniverse& u,
                            const std::vector<Formula>& anchors,
                            const std::vector<std::string>& expected) {
  std::vector<Formula> fs;
  for (Letter l : letters) fs.push_back(F(l));
  Partition p = signature_partition(fs, u, anchors);
  std::string failures;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    auto d = expect_eq(std::string(letter_name(letters[i])),
                       partition_bitstring(fs[i], p).to_string(), expected[i]);
    if (!d.empty()) failures += (failures.empty() ? "" : "; ") + d;
  }
  return failures;
}

std::string names_of(const std::vector<RegionModel>& ms) {
  std::string s;
  for (RegionModel m : ms) s += (s.empty() ? "" : ",") + m.name();
  return s.empty() ? "none" : s;
}

bool contains(const std::vector<RegionModel>& ms, RegionModel m) {
  return std::find(ms.begin(), ms.end(), m) != ms.end();
}

const RegionModel kEmptyModel{};

}  // namespace

std::vector<CheckResult> verify_paper() {
  Report rep;

  // Formalization table: FOL column and TL column.
  const std::pair<Letter, const char*> fol_rows[] = {
      {A, "not ex(A & ~B)"},   {E, "not ex(A & B)"},   {I, "ex(A & B)"},
      {O, "ex(A & ~B)"},       {Ap, "not ex(~A & B)"}, {Ep, "not ex(~A & ~B)"},
      {Ip, "ex(~A & ~B)"},     {Op, "ex(~A & B)"},
  };
  for (auto [l, text] : fol_rows) {
    rep.check("table.fol." + std::string(letter_name(l)),
              "FOL column of row " + std::string(letter_name(l)), [l = l, text = text] {
                return parse_formula(text) == F(l) ? "" : std::string("parsed formula differs");
              });
  }
  // Row strings as printed; A' is omitted because its printed form repeats E's.
  const std::pair<Letter, const char*> tl_rows[] = {
      {A, "-(+A-(+B))"}, {E, "-(+A+B))"},     {I, "+(+A+B)"},    {O, "+(+A+(-B))"},
      {Ep, "-(-A+(-B))"}, {Ip, "+(-A+(-B))"}, {Op, "+(-A+B)"},
  };
  for (auto [l, text] : tl_rows) {
    rep.check("table.tl." + std::string(letter_name(l)),
              "TL column of row " + std::string(letter_name(l)), [l = l, text = text] {
                return parse_formula(text, Syntax::Tl) == F(l) ? ""
                                                              : std::string("parsed formula differs");
              });
  }

  rep.check("models.order", "16 region models, w1 = {(i),(ii),(iii),(iv)}, w16 = {}", [] {
    const auto& u = all_models();
    if (u.size() != 16) return "size " + std::to_string(u.size());
    if (u[0] != RegionModel{Region::R1, Region::R2, Region::R3, Region::R4}) return std::string("w1");
    if (u[9] != RegionModel{Region::R2, Region::R4}) return std::string("w10");
    if (u[15] != kEmptyModel) return std::string("w16");
    return std::string();
  });
  rep.check("models.normal", "all-terms-nonempty universe has 7 models", [] {
    return expect_eq("models", names_of({normal_universe().begin(), normal_universe().end()}),
                     "w1,w2,w3,w4,w5,w8,w9");
  });

  rep.check("bits3.aristotelian", "3-bit table for A, E, I, O over nonempty(A)", [] {
    return check_partition({A, E, I, O}, restrict(all_models(), {nonempty(kA)}),
                           {F(A), F(I) & F(O), F(E)}, {"100", "001", "110", "011"});
  });
  rep.check("bits3.keynesian", "3-bit table for A', E', I', O' over nonempty(~A)", [] {
    return check_partition({Ap, Ep, Ip, Op}, restrict(all_models(), {nonempty(~kA)}),
                           {F(Ap), F(Ip) & F(Op), F(Ep)}, {"100", "001", "110", "011"});
  });
  rep.check("bits7.joint", "7-bit table for the eight forms over the normal models", [] {
    std::vector<Formula> anchors{
        F(A) & F(Ap),  F(A) & F(Op),  F(Ap) & F(O), F(I) & F(O) & F(Ip) & F(Op),
        F(I) & F(Ep),  F(E) & F(Ip),  F(E) & F(Ep)};
    return check_partition({A, E, I, O, Ap, Ep, Ip, Op}, normal_universe(), anchors,
                           {"1100000", "0000011", "1111100", "0011111", "1010000", "0000101",
                            "1111010", "0101111"});
  });

  rep.check("relations.aristotelian", "4x4 relation table over nonempty(A)", [] {
    // Symbols: = equivalent, x incompatible, > entails, < entailed, . compatible.
    const char* expected[4] = {"=x>x", "x=x>", "<x=.", "x<.="};
    auto m = relation_table(aristotelian_set(), restrict(all_models(), {nonempty(kA)}));
    for (int i = 0; i < 4; ++i) {
      std::string row;
      for (int j = 0; j < 4; ++j) {
        switch (m[i][j]) {
          case Relation::equivalent: row += '='; break;
          case Relation::contrary:
          case Relation::contradictory: row += 'x'; break;
          case Relation::subalternation: row += '>'; break;
          case Relation::superalternation: row += '<'; break;
          default: row += '.'; break;
        }
      }
      if (row != expected[i]) return "row " + std::to_string(i + 1) + ": " + row;
    }
    return std::string();
  });

  auto run_sequents = [&rep](const std::string& family, const std::vector<SequentSpec>& list,
                             const ModelUniverse& u, const std::string& where) {
    auto reports = verify_sequents(list, u);
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const SequentReport r = reports[k];
      rep.check("sequents." + family + "." + std::to_string(k + 1), r.sequent.label + " over " + where,
                [r] { return r.holds ? "" : "countermodels " + names_of(r.countermodels); });
    }
  };
  run_sequents("aristotelian", aristotelian_sequents(), restrict(all_models(), {nonempty(kA)}),
               "nonempty(A)");
  run_sequents("keynesian", keynesian_sequents(), restrict(all_models(), {nonempty(~kA)}),
               "nonempty(~A)");

  rep.check("failure.empty-subject", "in w16: v(A)=v(E)=1, v(I)=v(O)=0", [] {
    std::string got;
    for (Letter l : {A, E, I, O}) got += evaluate(F(l), kEmptyModel) ? '1' : '0';
    return expect_eq("A,E,I,O", got, "1100");
  });
  rep.check("failure.unrestricted", "over all 16 models A/O stay contradictory while A |- I and A _|_ E fail at w16", [] {
    const auto& u = all_models();
    if (relate(bitstring(F(A), u), bitstring(F(O), u)) != Relation::contradictory)
      return std::string("A/O not contradictory");
    auto reports = verify_sequents(
        {{"A ⊢ I", F(A), F(I), SequentKind::entails},
         {"A ⊥ E", F(A), F(E), SequentKind::incompatible}},
        u);
    for (const auto& r : reports) {
      if (r.holds) return r.sequent.label + " holds";
      if (!contains(r.countermodels, kEmptyModel)) return r.sequent.label + " without w16";
    }
    return std::string();
  });
  rep.check("failure.full-subject", "wherever everything is A: v(A')=v(E')=1, v(I')=v(O')=0", [] {
    auto u = restrict(all_models(), {full(kA)});
    if (u.empty()) return std::string("no model with A full");
    for (RegionModel m : u) {
      std::string got;
      for (Letter l : {Ap, Ep, Ip, Op}) got += evaluate(F(l), m) ? '1' : '0';
      if (got != "1100") return m.name() + ": " + got;
    }
    return std::string();
  });

  rep.check("import.quantity", "I and O have import about A, A and E lack it", [] {
    std::string got;
    for (Letter l : {A, E, I, O}) got += has_import(F(l), kA, all_models()) ? '1' : '0';
    return expect_eq("A,E,I,O", got, "0011");
  });

  rep.check("guards.single", "P! is ex(P) & X and P? is not(ex(P) & not X)", [] {
    const auto& u = all_models();
    for (Letter l : kAllLetters) {
      for (SignedTerm t : {kA, ~kA, kB, ~kB}) {
        Formula x = F(l);
        Formula bang = apply_commitments(x, {{t, ImportMode::Explicit}});
        Formula query = apply_commitments(x, {{t, ImportMode::Implicit}});
        if (bitstring(bang, u) != bitstring(ex(t) & x, u))
          return std::string(letter_name(l)) + "[" + to_string(t) + "!]";
        if (bitstring(query, u) != bitstring(!(ex(t) & !x), u))
          return std::string(letter_name(l)) + "[" + to_string(t) + "?]";
      }
    }
    return std::string();
  });

  for (const NamedSquare& sq : reference_squares()) {
    rep.check("squares." + sq.id, "square " + sq.id + " valid over all 16 models", [sq] {
      std::array<Formula, 4> f{parse_canonical(sq.corners[0]), parse_canonical(sq.corners[1]),
                               parse_canonical(sq.corners[2]), parse_canonical(sq.corners[3])};
      SquareReport r = is_valid_square(f[0], f[1], f[2], f[3], all_models());
      if (r.valid) return std::string();
      std::string failed;
      for (const auto& [c, ok] : r.checks)
        if (!ok) failed += (failed.empty() ? "" : ",") + std::string(to_string(c));
      return "failed " + failed;
    });
  }
  // Pools of all P! / P? variants of one square: exactly its three squares.
  for (bool complement : {false, true}) {
    const std::size_t first = complement ? 3 : 0;
    std::string id = complement ? "squares.pool-not-A" : "squares.pool-A";
    rep.check(id, "the eight guarded forms yield exactly the three reference squares", [first] {
      std::vector<ExtendedProposition> pool;
      std::set<std::string> names;
      for (std::size_t s = first; s < first + 3; ++s)
        for (const auto& c : reference_squares()[s].corners)
          if (names.insert(c).second) pool.push_back(ExtendedProposition::from(parse_name(c)));
      std::set<std::array<std::string, 4>> want, got;
      for (std::size_t s = first; s < first + 3; ++s) want.insert(reference_squares()[s].corners);
      for (const auto& r : enumerate_squares(pool, all_models())) got.insert(r.labels);
      if (pool.size() != 8) return "pool has " + std::to_string(pool.size()) + " forms";
      if (got != want) return "found " + std::to_string(got.size()) + " squares";
      return std::string();
    });
  }
  rep.check("squares.plain-unrestricted", "{A,E,I,O} is not a valid square over all 16 models", [] {
    auto r = is_valid_square(F(A), F(E), F(I), F(O), all_models());
    return r.valid ? std::string("square reported valid") : std::string();
  });
  rep.check("squares.plain-restricted", "{A,E,I,O} is a valid square over nonempty(A)", [] {
    auto r = is_valid_square(F(A), F(E), F(I), F(O), restrict(all_models(), {nonempty(kA)}));
    return r.valid ? std::string() : std::string("square reported invalid");
  });
  rep.check("family.count", "256 propositions: 128 conjunctive forms and their negations", [] {
    const auto& fam = family_256();
    return fam.size() == 256 ? std::string() : "size " + std::to_string(fam.size());
  });

  return rep.take();
}

json to_json(const std::vector<CheckResult>& results) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const CheckResult& r : results) {
    passed += r.passed;
    json c = {{"id", r.id}, {"description", r.description}, {"passed", r.passed}};
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(c);
  }
  return {{"passed", passed}, {"failed", results.size() - passed}, {"checks", checks}};
}

}  // namespace catprop
