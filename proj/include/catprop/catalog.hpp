#pragma once

// Named proposition families and squares of opposition.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "catprop/bitstring.hpp"
#include "catprop/commitment.hpp"
#include "catprop/formula.hpp"
#include "catprop/opposition.hpp"
#include "catprop/semantics.hpp"

namespace catprop {

/// [A, E, I, O]
std::vector<Formula> aristotelian_set();
/// [A', E', I', O']
std::vector<Formula> keynesian_set();

struct ExtendedProposition {
  PropositionName name;
  Formula derived;

  static ExtendedProposition from(PropositionName name);

  /// The core letter, or its contradictory for a negated proposition
  /// (the negation of X[P!] is X's contradictory under a P? guard).
  Letter effective_letter() const;
};

/// The 256-family. Entries 0..127 are the conjunctive forms
/// `(+/-)ex(+/-A) & (+/-)ex(+/-B) & core`, ordered by core (A, E, I, O, A',
/// E', I', O'), then A-claim, then B-claim, with claims ordered
/// P!, ~P!, P0, ~P0. Entry 128 + k is the negation of entry k.
const std::vector<ExtendedProposition>& family_256();

/// The single-commitment forms X[P!] and X[P?] for every core X and signed
/// term P (8 x 4 x 2 = 64 entries), ordered by core, term, mode.
std::vector<ExtendedProposition> single_commitment_forms();

// ---------------------------------------------------------------------------
// Squares

enum class SquareCheck {
  contrary_top,          // U1, U2
  contradictory_left,    // U1, P2
  contradictory_right,   // U2, P1
  subcontrary_bottom,    // P1, P2
  subalternation_left,   // U1 -> P1
  subalternation_right,  // U2 -> P2
};

inline constexpr std::array<SquareCheck, 6> kSquareChecks{
    SquareCheck::contrary_top,        SquareCheck::contradictory_left,
    SquareCheck::contradictory_right, SquareCheck::subcontrary_bottom,
    SquareCheck::subalternation_left, SquareCheck::subalternation_right};

std::string_view to_string(SquareCheck c);

struct SquareReport {
  /// U1, U2, P1, P2: universals on top, particulars below, P1 under U1.
  std::array<std::string, 4> labels;
  std::array<Bitstring, 4> bits;
  std::map<SquareCheck, bool> checks;
  bool valid = false;
};

/// Checks the six square relations over `u`; degenerate corners fail.
/// Labels are the fol-dsl texts of the corners.
SquareReport is_valid_square(const Formula& u1, const Formula& u2, const Formula& p1,
                             const Formula& p2, const ModelUniverse& u);

enum class SquareForm {
  /// U1, U2 universal and P1, P2 particular; U1, P1 affirmative and U2, P2
  /// negative (by effective letter).
  proper,
  /// Any four pool members standing in the six square relations.
  relational,
};

/// All valid squares whose corners come from `pool`, one per distinct
/// bitstring quadruple (the {U1,U2} swap counts as the same square). Each
/// corner is represented by the first pool member with its bitstring that
/// fits the corner (any member for `relational`). Results are ordered by the
/// pool indices of U1, U2, P1, P2.
std::vector<SquareReport> enumerate_squares(const std::vector<ExtendedProposition>& pool,
                                            const ModelUniverse& u,
                                            SquareForm form = SquareForm::proper);

struct NamedSquare {
  std::string id;
  /// U1, U2, P1, P2 canonical names.
  std::array<std::string, 4> corners;
};

/// S1-S3 with import about A, and their complements with import about
/// not-A over the Keynesian cores.
const std::vector<NamedSquare>& reference_squares();

}  // namespace catprop
