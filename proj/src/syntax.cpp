#include "catprop/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "catprop/errors.hpp"

namespace catprop {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : Error("parse error at offset " + std::to_string(position) + ": expected " +
            join(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

Syntax syntax_from_name(std::string_view name) {
  if (name == "fol-dsl" || name == "fol") return Syntax::FolDsl;
  if (name == "tl") return Syntax::Tl;
  throw UnknownName("unknown syntax '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// fol-dsl

namespace {

enum class Tok { Ex, Not, LParen, RParen, And, Or, Arrow, Tilde, PredA, PredB, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ex: return "'ex'";
    case Tok::Not: return "'not'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Tilde: return "'~'";
    case Tok::PredA: return "'A'";
    case Tok::PredB: return "'B'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, i++, "("}); continue;
      case ')': out.push_back({Tok::RParen, i++, ")"}); continue;
      case '&': out.push_back({Tok::And, i++, "&"}); continue;
      case '|': out.push_back({Tok::Or, i++, "|"}); continue;
      case '~': out.push_back({Tok::Tilde, i++, "~"}); continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Arrow, i, "->"});
          i += 2;
          continue;
        }
        throw ParseError(i, {"'->'"}, "'-'");
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_'))
        ++i;
      std::string word(text.substr(start, i - start));
      if (word == "ex") out.push_back({Tok::Ex, start, word});
      else if (word == "not") out.push_back({Tok::Not, start, word});
      else if (word == "A") out.push_back({Tok::PredA, start, word});
      else if (word == "B") out.push_back({Tok::PredB, start, word});
      else if (word == "necessarily" || word == "possibly")
        throw UnsupportedForm("modal operator '" + word + "' at offset " +
                              std::to_string(start) + " is not supported");
      else
        throw ParseError(start, {"'ex'", "'not'", "'A'", "'B'"}, "'" + word + "'");
      continue;
    }
    throw ParseError(i, {"'ex'", "'not'", "'('"}, std::string("'") + c + "'");
  }
  out.push_back({Tok::End, text.size(), ""});
  return out;
}

class DslParser {
 public:
  explicit DslParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse() {
    Formula f = formula();
    if (peek().kind != Tok::End) fail({Tok::End, Tok::And, Tok::Or, Tok::Arrow});
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    for (Tok t : expected) names.push_back(describe(t));
    const Token& tok = peek();
    throw ParseError(tok.pos, names,
                     tok.kind == Tok::End ? "end of input" : "'" + tok.text + "'");
  }

  void expect(Tok t) {
    if (!accept(t)) fail({t});
  }

  Formula formula() {
    Formula lhs = disj();
    if (accept(Tok::Arrow)) return implies(std::move(lhs), formula());
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (accept(Tok::Or)) f = f | conj();
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (accept(Tok::And)) f = f & unary();
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return !unary();
    return atom();
  }

  Formula atom() {
    if (accept(Tok::LParen)) {
      Formula f = formula();
      if (!accept(Tok::RParen)) fail({Tok::RParen, Tok::And, Tok::Or, Tok::Arrow});
      return f;
    }
    if (!accept(Tok::Ex)) fail({Tok::Ex, Tok::Not, Tok::LParen});
    expect(Tok::LParen);
    SignedTerm first = term();
    if (accept(Tok::RParen)) return ex(first);
    if (peek().kind != Tok::And) fail({Tok::And, Tok::RParen});
    ++pos_;
    std::size_t second_pos = peek().pos;
    SignedTerm second = term();
    expect(Tok::RParen);
    if (first.base == second.base)
      throw ParseError(second_pos,
                       {first.base == Pred::A ? "'B'" : "'A'"},
                       "second literal over " + to_string(SignedTerm{first.base, true}));
    if (first.base == Pred::A) return ex(first, second);
    return ex(second, first);
  }

  SignedTerm term() {
    bool positive = !accept(Tok::Tilde);
    if (accept(Tok::PredA)) return {Pred::A, positive};
    if (accept(Tok::PredB)) return {Pred::B, positive};
    if (positive) fail({Tok::Tilde, Tok::PredA, Tok::PredB});
    fail({Tok::PredA, Tok::PredB});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

enum Prec { kOr = 1, kAnd = 2, kNot = 3, kAtom = 4 };

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Or: return kOr;
    case Formula::Kind::And: return kAnd;
    case Formula::Kind::Not: return kNot;
    default: return kAtom;
  }
}

void print_dsl(const Formula& f, int min_prec, std::ostream& os) {
  bool paren = precedence(f) < min_prec;
  if (paren) os << '(';
  switch (f.kind()) {
    case Formula::Kind::ExistsTerm:
      os << "ex(" << to_string(f.term()) << ')';
      break;
    case Formula::Kind::ExistsPair:
      os << "ex(" << to_string(f.term()) << " & " << to_string(f.second_term()) << ')';
      break;
    case Formula::Kind::Not:
      os << "not ";
      print_dsl(f.lhs(), kNot, os);
      break;
    case Formula::Kind::And:
      print_dsl(f.lhs(), kAnd, os);
      os << " & ";
      print_dsl(f.rhs(), kAnd + 1, os);
      break;
    case Formula::Kind::Or:
      print_dsl(f.lhs(), kOr, os);
      os << " | ";
      print_dsl(f.rhs(), kOr + 1, os);
      break;
  }
  if (paren) os << ')';
}

// ---------------------------------------------------------------------------
// tl

struct TlRow {
  Letter letter;
  std::string_view text;
};

// A' has no row: the printed table gives it the same string as E.
constexpr std::array<TlRow, 7> kTlRows{{
    {Letter::A, "-(+A-(+B))"},
    {Letter::E, "-(+A+B)"},
    {Letter::I, "+(+A+B)"},
    {Letter::O, "+(+A+(-B))"},
    {Letter::Ep, "-(-A+(-B))"},
    {Letter::Ip, "+(-A+(-B))"},
    {Letter::Op, "+(-A+B)"},
}};

std::optional<Letter> tl_lookup(std::string_view body) {
  for (const auto& row : kTlRows) {
    if (body == row.text) return row.letter;
    // Tolerate the stray closing parenthesis printed on some rows.
    if (body.size() == row.text.size() + 1 && body.back() == ')' &&
        body.substr(0, row.text.size()) == row.text)
      return row.letter;
  }
  return std::nullopt;
}

Formula parse_tl(std::string_view text) {
  std::string compact;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact += text[i];
    origin.push_back(i);
  }
  origin.push_back(text.size());
  auto at = [&](std::size_t k) { return origin[std::min(k, origin.size() - 1)]; };

  if (compact.empty()) throw ParseError(0, {"'+'", "'-'"}, "end of input");

  std::size_t offset = 0;
  bool outer_negation = false;
  if (compact.size() >= 2 && (compact[0] == '+' || compact[0] == '-') &&
      (compact[1] == '+' || compact[1] == '-')) {
    outer_negation = compact[0] == '-';
    offset = 1;
  }
  std::string_view body = std::string_view(compact).substr(offset);
  if (auto letter = tl_lookup(body)) {
    Formula f = canonical(*letter);
    return outer_negation ? !f : f;
  }

  // Report the first character at which no table row can continue.
  std::size_t best = 0;
  for (const auto& row : kTlRows) {
    std::size_t k = 0;
    while (k < body.size() && k < row.text.size() && body[k] == row.text[k]) ++k;
    best = std::max(best, k);
  }
  std::set<std::string> expected;
  for (const auto& row : kTlRows) {
    if (row.text.substr(0, std::min(best, row.text.size())) != body.substr(0, best))
      continue;
    if (best < row.text.size()) expected.insert(std::string("'") + row.text[best] + "'");
    else expected.insert("end of input");
  }
  std::string found =
      best < body.size() ? std::string("'") + body[best] + "'" : "end of input";
  throw ParseError(at(offset + best),
                   std::vector<std::string>(expected.begin(), expected.end()), found);
}

std::string_view tl_row(Letter l) {
  for (const auto& row : kTlRows)
    if (row.letter == l) return row.text;
  return {};
}

}  // namespace

Formula parse_formula(std::string_view text, Syntax syntax) {
  if (syntax == Syntax::Tl) return parse_tl(text);
  return DslParser(lex(text)).parse();
}

std::string to_text(const Formula& f, Syntax syntax) {
  if (syntax == Syntax::FolDsl) {
    std::ostringstream os;
    print_dsl(f, 0, os);
    return os.str();
  }
  if (auto l = canonical_letter(f); l && !tl_row(*l).empty())
    return std::string(tl_row(*l));
  if (f.kind() == Formula::Kind::Not) {
    if (auto l = canonical_letter(f.lhs()); l && !tl_row(*l).empty())
      return "-" + std::string(tl_row(*l));
  }
  throw NotRepresentable("formula has no tl form");
}

}  // namespace catprop
