#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace catprop {

/// Truth profile of a formula across an ordered model universe.
/// Rendered as '0'/'1' characters, leftmost bit = first model.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::size_t n, bool value = false) : bits_(n, value) {}
  explicit Bitstring(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Throws std::invalid_argument on characters other than '0'/'1'.
  static Bitstring from_string(std::string_view s);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool v) { bits_[i] = v; }

  bool all() const;
  bool none() const;
  std::size_t count() const;

  std::string to_string() const;

  /// Bitwise operators throw LengthMismatch on different lengths.
  friend Bitstring operator&(const Bitstring& x, const Bitstring& y);
  friend Bitstring operator|(const Bitstring& x, const Bitstring& y);
  friend Bitstring operator~(const Bitstring& x);

  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  friend auto operator<=>(const Bitstring& x, const Bitstring& y) {
    return x.to_string() <=> y.to_string();
  }

 private:
  std::vector<bool> bits_;
};

}  // namespace catprop
