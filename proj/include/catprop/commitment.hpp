#pragma once

// Existential-import commitments and the canonical-name grammar
//
//   name       := [ '-' ] LETTER [ '[' commitment { ',' commitment } ']' ]
//   LETTER     := ( 'A' | 'E' | 'I' | 'O' ) [ "'" | "′" ]
//   commitment := [ '~' ] ( 'A' | 'B' ) ( '!' | '?' | '0' )
//
// `P!` asserts that something is P, `P?` makes the core conditional on
// something being P, `P0` asserts that nothing is P. A leading '-' negates
// the whole proposition. Examples: `A[A!]`, `I[~A?]`, `-E'[~A!,B0]`.

#include <string>
#include <string_view>
#include <vector>

#include "catprop/formula.hpp"

namespace catprop {

enum class ImportMode {
  Explicit,  // !
  Implicit,  // ?
  Denied,    // 0
};

struct Commitment {
  SignedTerm term;
  ImportMode mode = ImportMode::Explicit;

  friend constexpr bool operator==(Commitment, Commitment) = default;
};

std::string to_string(Commitment c);

/// derived = (claims of the explicit and denied commitments, in base order)
///           & ((guards of the implicit commitments) -> core)
///
/// where the implication is written `not (guards & not core)`. With one
/// commitment this is `ex(P) & core` for `!` and `not (ex(P) & not core)`
/// for `?`. Throws DuplicateCommitment if two commitments share a base.
Formula apply_commitments(const Formula& core, std::vector<Commitment> cs);

struct PropositionName {
  Letter core = Letter::A;
  /// Sorted by base, at most one per base.
  std::vector<Commitment> commitments;
  bool negated = false;

  std::string to_string() const;
  Formula formula() const;

  friend bool operator==(const PropositionName&, const PropositionName&) = default;
};

/// Throws UnknownName on grammar violations and DuplicateCommitment.
PropositionName parse_name(std::string_view text);

/// parse_name(text).formula().
Formula parse_canonical(std::string_view text);

}  // namespace catprop
