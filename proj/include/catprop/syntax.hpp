#pragma once

// Concrete syntaxes for formulas.
//
// fol-dsl grammar (precedence not > & > | > ->, `->` right-associative):
//
//   formula := disj [ '->' formula ]
//   disj    := conj { '|' conj }
//   conj    := unary { '&' unary }
//   unary   := 'not' unary | atom
//   atom    := 'ex' '(' term [ '&' term ] ')' | '(' formula ')'
//   term    := [ '~' ] ( 'A' | 'B' )
//
// `p -> q` is read as `not p | q`. The tl syntax is the signed-literal
// notation of the traditional table, restricted to its eight row strings
// with an optional extra outer sign.

#include <string>
#include <string_view>

#include "catprop/formula.hpp"

namespace catprop {

enum class Syntax { FolDsl, Tl };

/// "fol-dsl" / "tl"; throws UnknownName.
Syntax syntax_from_name(std::string_view name);

/// Throws ParseError on malformed text and UnsupportedForm on modal keywords.
Formula parse_formula(std::string_view text, Syntax syntax = Syntax::FolDsl);

/// Throws NotRepresentable when `syntax` is tl and `f` is not one of the
/// table forms (or an outer negation of one).
std::string to_text(const Formula& f, Syntax syntax = Syntax::FolDsl);

}  // namespace catprop
