#include "catprop/formula.hpp"

#include <stdexcept>
#include <vector>

#include "catprop/errors.hpp"

namespace catprop {

std::string to_string(SignedTerm t) {
  std::string s = t.positive ? "" : "~";
  s += t.base == Pred::A ? 'A' : 'B';
  return s;
}

Formula Formula::exists(SignedTerm t) {
  return Formula(std::make_shared<const Node>(Node{Kind::ExistsTerm, t, {}, {}, {}}));
}

Formula Formula::exists(SignedTerm a, SignedTerm b) {
  if (a.base != Pred::A || b.base != Pred::B)
    throw std::invalid_argument("ExistsPair needs one A-literal and one B-literal");
  return Formula(std::make_shared<const Node>(Node{Kind::ExistsPair, a, b, {}, {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Not, {}, {}, std::make_shared<const Formula>(std::move(f)), {}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, {}, std::make_shared<const Formula>(std::move(lhs)),
           std::make_shared<const Formula>(std::move(rhs))}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {}, std::make_shared<const Formula>(std::move(lhs)),
           std::make_shared<const Formula>(std::move(rhs))}));
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Formula::Kind::ExistsTerm:
      return x.term() == y.term();
    case Formula::Kind::ExistsPair:
      return x.term() == y.term() && x.second_term() == y.second_term();
    case Formula::Kind::Not:
      return x.lhs() == y.lhs();
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return x.lhs() == y.lhs() && x.rhs() == y.rhs();
  }
  return false;
}

Formula negate(const Formula& f) {
  if (f.kind() == Formula::Kind::Not) return f.lhs();
  return !f;
}

Formula implies(Formula p, Formula q) { return (!std::move(p)) | std::move(q); }

std::size_t size(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::ExistsTerm:
    case Formula::Kind::ExistsPair:
      return 1;
    case Formula::Kind::Not:
      return 1 + size(f.lhs());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + size(f.lhs()) + size(f.rhs());
  }
  return 0;
}

std::string_view letter_name(Letter l) {
  switch (l) {
    case Letter::A: return "A";
    case Letter::E: return "E";
    case Letter::I: return "I";
    case Letter::O: return "O";
    case Letter::Ap: return "A'";
    case Letter::Ep: return "E'";
    case Letter::Ip: return "I'";
    case Letter::Op: return "O'";
  }
  return "?";
}

std::optional<Letter> letter_from_name(std::string_view name) {
  if (name.empty()) return std::nullopt;
  std::optional<Letter> base;
  switch (name.front()) {
    case 'A': base = Letter::A; break;
    case 'E': base = Letter::E; break;
    case 'I': base = Letter::I; break;
    case 'O': base = Letter::O; break;
    default: return std::nullopt;
  }
  auto rest = name.substr(1);
  if (rest.empty()) return base;
  if (rest == "'" || rest == "′")
    return static_cast<Letter>(static_cast<int>(*base) + 4);
  return std::nullopt;
}

Formula canonical(Letter l) {
  switch (l) {
    case Letter::A: return !ex(kA, ~kB);
    case Letter::E: return !ex(kA, kB);
    case Letter::I: return ex(kA, kB);
    case Letter::O: return ex(kA, ~kB);
    case Letter::Ap: return !ex(~kA, kB);
    case Letter::Ep: return !ex(~kA, ~kB);
    case Letter::Ip: return ex(~kA, ~kB);
    case Letter::Op: return ex(~kA, kB);
  }
  throw std::logic_error("bad letter");
}

std::optional<Letter> canonical_letter(const Formula& f) {
  for (Letter l : kAllLetters)
    if (canonical(l) == f) return l;
  return std::nullopt;
}

Letter contradictory(Letter l) {
  switch (l) {
    case Letter::A: return Letter::O;
    case Letter::E: return Letter::I;
    case Letter::I: return Letter::E;
    case Letter::O: return Letter::A;
    case Letter::Ap: return Letter::Op;
    case Letter::Ep: return Letter::Ip;
    case Letter::Ip: return Letter::Ep;
    case Letter::Op: return Letter::Ap;
  }
  throw std::logic_error("bad letter");
}

namespace {

bool is_signed(const Formula& f, Formula::Kind atom) {
  if (f.kind() == atom) return true;
  return f.kind() == Formula::Kind::Not && f.lhs().kind() == atom;
}

void flatten_and(const Formula& f, std::vector<const Formula*>& out) {
  if (f.kind() == Formula::Kind::And) {
    flatten_and(f.lhs(), out);
    flatten_and(f.rhs(), out);
  } else {
    out.push_back(&f);
  }
}

// Walks a conjunction whose parts are signed existence claims, signed pair
// cores, or negated conjunctions of the same (implicit import guards).
bool collect_extended(const Formula& f, int& cores, bool& seen_a, bool& seen_b) {
  std::vector<const Formula*> parts;
  flatten_and(f, parts);
  for (const Formula* p : parts) {
    if (is_signed(*p, Formula::Kind::ExistsPair)) {
      ++cores;
    } else if (is_signed(*p, Formula::Kind::ExistsTerm)) {
      const Formula& atom = p->kind() == Formula::Kind::Not ? p->lhs() : *p;
      bool& seen = atom.term().base == Pred::A ? seen_a : seen_b;
      if (seen) return false;
      seen = true;
    } else if (p->kind() == Formula::Kind::Not &&
               p->lhs().kind() == Formula::Kind::And) {
      if (!collect_extended(p->lhs(), cores, seen_a, seen_b)) return false;
    } else {
      return false;
    }
  }
  return true;
}

bool is_extended(const Formula& f) {
  if (f.kind() != Formula::Kind::And) return false;
  int cores = 0;
  bool seen_a = false, seen_b = false;
  return collect_extended(f, cores, seen_a, seen_b) && cores == 1 &&
         (seen_a || seen_b);
}

}  // namespace

FormClass classify_type(const Formula& f) {
  if (is_signed(f, Formula::Kind::ExistsPair)) return {4, 4};
  if (is_signed(f, Formula::Kind::ExistsTerm)) return {2, 2};
  const Formula& body = f.kind() == Formula::Kind::Not ? f.lhs() : f;
  if (is_extended(body)) return {4, 7};
  throw Unclassifiable("formula is outside the categorical schemes");
}

}  // namespace catprop
