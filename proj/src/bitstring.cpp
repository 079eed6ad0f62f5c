#include "catprop/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

#include "catprop/errors.hpp"

namespace catprop {

namespace {

void check_lengths(const Bitstring& x, const Bitstring& y) {
  if (x.size() != y.size())
    throw LengthMismatch("bitstring lengths differ: " + std::to_string(x.size()) +
                         " vs " + std::to_string(y.size()));
}

}  // namespace

Bitstring Bitstring::from_string(std::string_view s) {
  std::vector<bool> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bitstring may only contain '0' and '1'");
    bits.push_back(c == '1');
  }
  return Bitstring(std::move(bits));
}

bool Bitstring::all() const {
  return std::all_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

bool Bitstring::none() const {
  return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

std::size_t Bitstring::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string Bitstring::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s += b ? '1' : '0';
  return s;
}

Bitstring operator&(const Bitstring& x, const Bitstring& y) {
  check_lengths(x, y);
  Bitstring out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.bits_[i] = x.bits_[i] && y.bits_[i];
  return out;
}

Bitstring operator|(const Bitstring& x, const Bitstring& y) {
  check_lengths(x, y);
  Bitstring out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.bits_[i] = x.bits_[i] || y.bits_[i];
  return out;
}

Bitstring operator~(const Bitstring& x) {
  Bitstring out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.bits_[i] = !x.bits_[i];
  return out;
}

}  // namespace catprop
