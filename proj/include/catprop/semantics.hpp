#pragma once

// Region-model semantics for the two-predicate monadic fragment.
//
// A model is characterized by which of the four Venn regions of A and B are
// inhabited:
//   R1 = A & B,  R2 = A & ~B,  R3 = ~A & B,  R4 = ~A & ~B.
// Every formula of the language is a Boolean combination of region-existence
// claims, so the 16 inhabitation profiles are semantically complete.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catprop/bitstring.hpp"
#include "catprop/formula.hpp"

namespace catprop {

enum class Region : std::uint8_t { R1 = 0, R2 = 1, R3 = 2, R4 = 3 };

inline constexpr Region kAllRegions[] = {Region::R1, Region::R2, Region::R3, Region::R4};

/// The region an element lands in given its A- and B-membership.
constexpr Region region_of(bool in_a, bool in_b) {
  if (in_a) return in_b ? Region::R1 : Region::R2;
  return in_b ? Region::R3 : Region::R4;
}

/// True iff an element of region `r` satisfies the signed term.
constexpr bool satisfies(Region r, SignedTerm t) {
  bool in_a = r == Region::R1 || r == Region::R2;
  bool in_b = r == Region::R1 || r == Region::R3;
  bool holds = t.base == Pred::A ? in_a : in_b;
  return holds == t.positive;
}

class RegionModel {
 public:
  constexpr RegionModel() = default;
  constexpr explicit RegionModel(std::uint8_t mask) : mask_(mask & 0xF) {}
  RegionModel(std::initializer_list<Region> regions);

  constexpr bool has(Region r) const {
    return (mask_ >> static_cast<int>(r)) & 1U;
  }
  constexpr std::uint8_t mask() const { return mask_; }

  /// Position in the standard order, 1-based: w1 = all four, ..., w16 = {}.
  int index() const;
  /// "w1" .. "w16".
  std::string name() const;
  /// "{(i),(ii)}" style listing.
  std::string regions_text() const;

  static std::optional<RegionModel> from_name(std::string_view name);

  friend constexpr bool operator==(RegionModel, RegionModel) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// Ordered, duplicate-free sequence of region models; order fixes bit positions.
class ModelUniverse {
 public:
  ModelUniverse() = default;
  /// Throws std::invalid_argument on duplicates.
  explicit ModelUniverse(std::vector<RegionModel> models);

  std::size_t size() const { return models_.size(); }
  bool empty() const { return models_.empty(); }
  const RegionModel& operator[](std::size_t i) const { return models_[i]; }
  auto begin() const { return models_.begin(); }
  auto end() const { return models_.end(); }
  std::span<const RegionModel> models() const { return models_; }

  std::vector<std::string> names() const;

  friend bool operator==(const ModelUniverse&, const ModelUniverse&) = default;

 private:
  std::vector<RegionModel> models_;
};

/// The 16 models w1..w16 in the standard order.
const ModelUniverse& all_models();

/// Total bivalent valuation of `f` in `m`.
bool evaluate(const Formula& f, RegionModel m);

/// Bit k = evaluate(f, u[k]).
Bitstring bitstring(const Formula& f, const ModelUniverse& u);

struct Constraint {
  bool nonempty = true;
  SignedTerm term;

  friend constexpr bool operator==(Constraint, Constraint) = default;
};

constexpr Constraint nonempty(SignedTerm t) { return {true, t}; }
constexpr Constraint empty(SignedTerm t) { return {false, t}; }
/// "Everything is P" is "nothing is not-P".
constexpr Constraint full(SignedTerm t) { return {false, ~t}; }

bool satisfies(RegionModel m, Constraint c);

/// Keeps the models satisfying every constraint, in order. May be empty.
ModelUniverse restrict(const ModelUniverse& u, std::span<const Constraint> constraints);
ModelUniverse restrict(const ModelUniverse& u, std::initializer_list<Constraint> constraints);

// ---------------------------------------------------------------------------
// Explicit finite domains, used as an independent oracle.

struct FiniteUniverse {
  /// elements[i] is the region element i lies in.
  std::vector<Region> elements;

  std::size_t size() const { return elements.size(); }
};

/// Every region assignment for domain sizes 0..max_size; sum of 4^k entries.
std::vector<FiniteUniverse> enumerate_universes(int max_size = 4);

RegionModel regions_of(const FiniteUniverse& fu);

/// Tarskian evaluation: existentials range over the actual elements.
bool evaluate_direct(const Formula& f, const FiniteUniverse& fu);

}  // namespace catprop
