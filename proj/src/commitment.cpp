#include "catprop/commitment.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "catprop/errors.hpp"

namespace catprop {

std::string to_string(Commitment c) {
  std::string s = catprop::to_string(c.term);
  switch (c.mode) {
    case ImportMode::Explicit: s += '!'; break;
    case ImportMode::Implicit: s += '?'; break;
    case ImportMode::Denied: s += '0'; break;
  }
  return s;
}

namespace {

void sort_and_check(std::vector<Commitment>& cs) {
  std::stable_sort(cs.begin(), cs.end(), [](Commitment x, Commitment y) {
    return static_cast<int>(x.term.base) < static_cast<int>(y.term.base);
  });
  for (std::size_t i = 1; i < cs.size(); ++i)
    if (cs[i].term.base == cs[i - 1].term.base)
      throw DuplicateCommitment("two commitments on " +
                                catprop::to_string(SignedTerm{cs[i].term.base, true}));
}

Formula conjoin(const std::vector<Formula>& parts) {
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = out & parts[i];
  return out;
}

}  // namespace

Formula apply_commitments(const Formula& core, std::vector<Commitment> cs) {
  sort_and_check(cs);
  std::vector<Formula> claims;
  std::vector<Formula> guards;
  for (Commitment c : cs) {
    switch (c.mode) {
      case ImportMode::Explicit: claims.push_back(ex(c.term)); break;
      case ImportMode::Denied: claims.push_back(!ex(c.term)); break;
      case ImportMode::Implicit: guards.push_back(ex(c.term)); break;
    }
  }
  Formula body = guards.empty() ? core : !(conjoin(guards) & negate(core));
  if (claims.empty()) return body;
  return conjoin(claims) & body;
}

std::string PropositionName::to_string() const {
  std::string s = negated ? "-" : "";
  s += letter_name(core);
  if (!commitments.empty()) {
    s += '[';
    for (std::size_t i = 0; i < commitments.size(); ++i) {
      if (i) s += ',';
      s += catprop::to_string(commitments[i]);
    }
    s += ']';
  }
  return s;
}

Formula PropositionName::formula() const {
  Formula f = apply_commitments(canonical(core), commitments);
  return negated ? negate(f) : f;
}

namespace {

class NameParser {
 public:
  explicit NameParser(std::string_view text) : text_(text) {}

  PropositionName parse() {
    PropositionName name;
    skip_space();
    if (accept('-')) name.negated = true;
    skip_space();
    name.core = letter();
    skip_space();
    if (accept('[')) {
      do {
        skip_space();
        name.commitments.push_back(commitment());
        skip_space();
      } while (accept(','));
      if (!accept(']')) fail("expected ',' or ']'");
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    sort_and_check(name.commitments);
    return name;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UnknownName("'" + std::string(text_) + "' is not a proposition name: " + why +
                      " at offset " + std::to_string(pos_));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Letter letter() {
    for (std::size_t len : {std::size_t{4}, std::size_t{2}, std::size_t{1}}) {
      if (pos_ + len > text_.size()) continue;
      if (auto l = letter_from_name(text_.substr(pos_, len))) {
        pos_ += len;
        return *l;
      }
    }
    fail("expected one of A, E, I, O (optionally primed)");
  }

  Commitment commitment() {
    Commitment c;
    c.term.positive = !accept('~');
    if (accept('A')) c.term.base = Pred::A;
    else if (accept('B')) c.term.base = Pred::B;
    else fail("expected A or B");
    if (accept('!')) c.mode = ImportMode::Explicit;
    else if (accept('?')) c.mode = ImportMode::Implicit;
    else if (accept('0')) c.mode = ImportMode::Denied;
    else fail("expected '!', '?' or '0'");
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PropositionName parse_name(std::string_view text) { return NameParser(text).parse(); }

Formula parse_canonical(std::string_view text) { return parse_name(text).formula(); }

}  // namespace catprop
