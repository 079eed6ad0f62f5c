#pragma once

// Formula language over two unary predicates A and B.
//
// Every formula is a closed Boolean combination of two kinds of atom:
//   ex(T)        : (Ex) T x            for a signed term T in {A, ~A, B, ~B}
//   ex(TA & TB)  : (Ex)(TA x & TB x)   one A-literal paired with one B-literal
// `~` is term negation ("not-B"); `!` on a Formula is propositional negation.

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace catprop {

enum class Pred { A, B };

struct SignedTerm {
  Pred base = Pred::A;
  bool positive = true;

  friend constexpr bool operator==(SignedTerm, SignedTerm) = default;
};

/// Term negation: ~A is "not-A".
constexpr SignedTerm operator~(SignedTerm t) { return {t.base, !t.positive}; }

inline constexpr SignedTerm kA{Pred::A, true};
inline constexpr SignedTerm kB{Pred::B, true};

std::string to_string(SignedTerm t);

class Formula {
 public:
  enum class Kind { ExistsTerm, ExistsPair, Not, And, Or };

  static Formula exists(SignedTerm t);
  /// Throws std::invalid_argument unless `a` is over A and `b` over B.
  static Formula exists(SignedTerm a, SignedTerm b);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  /// ExistsTerm: the term. ExistsPair: the A-literal.
  SignedTerm term() const { return node_->first; }
  /// ExistsPair only: the B-literal.
  SignedTerm second_term() const { return node_->second; }
  /// Not: operand. And/Or: left operand.
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  bool is_atom() const {
    return kind() == Kind::ExistsTerm || kind() == Kind::ExistsPair;
  }

  friend bool operator==(const Formula& x, const Formula& y);

 private:
  struct Node {
    Kind kind;
    SignedTerm first{};
    SignedTerm second{};
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline Formula ex(SignedTerm t) { return Formula::exists(t); }
inline Formula ex(SignedTerm a, SignedTerm b) { return Formula::exists(a, b); }

/// Structural negation (no simplification).
inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&(Formula l, Formula r) {
  return Formula::conjunction(std::move(l), std::move(r));
}
inline Formula operator|(Formula l, Formula r) {
  return Formula::disjunction(std::move(l), std::move(r));
}

/// Not(f), except that a root double negation is eliminated.
Formula negate(const Formula& f);

/// Material implication, desugared to `!p | q`.
Formula implies(Formula p, Formula q);

/// Number of nodes; used by generators and tests.
std::size_t size(const Formula& f);

// ---------------------------------------------------------------------------
// Canonical forms

/// The eight categorical forms: A, E, I, O and their Keynesian
/// counterparts A', E', I', O' (negated subject term).
enum class Letter { A, E, I, O, Ap, Ep, Ip, Op };

inline constexpr Letter kAllLetters[] = {Letter::A,  Letter::E,  Letter::I,
                                         Letter::O,  Letter::Ap, Letter::Ep,
                                         Letter::Ip, Letter::Op};

/// "A", "E", ..., "A'", ... (ASCII prime).
std::string_view letter_name(Letter l);
/// Accepts the ASCII prime and U+2032.
std::optional<Letter> letter_from_name(std::string_view name);

Formula canonical(Letter l);
/// The letter whose canonical formula is structurally equal to `f`.
std::optional<Letter> canonical_letter(const Formula& f);
/// Negation pairs (A,O), (E,I), (A',O'), (E',I').
Letter contradictory(Letter l);

/// A, E, A', E' (negated existentials).
constexpr bool is_universal(Letter l) {
  return l == Letter::A || l == Letter::E || l == Letter::Ap || l == Letter::Ep;
}

/// A, I, A', I'.
constexpr bool is_affirmative(Letter l) {
  return l == Letter::A || l == Letter::I || l == Letter::Ap || l == Letter::Ip;
}

// ---------------------------------------------------------------------------
// Classification by logical-form scheme

struct FormClass {
  int type_index = 0;
  int literal_count = 0;

  friend constexpr bool operator==(FormClass, FormClass) = default;
};

/// Pair forms (optionally negated) are Type 4 with 4 literals; extended
/// forms (existence claims conjoined with a pair core, optionally negated)
/// are Type 4 with 7 literals; a standalone signed existence claim is
/// Type 2 with 2 literals. Throws Unclassifiable otherwise.
FormClass classify_type(const Formula& f);

}  // namespace catprop
