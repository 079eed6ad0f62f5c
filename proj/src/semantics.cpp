#include "catprop/semantics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "catprop/errors.hpp"

namespace catprop {

namespace {

constexpr std::uint8_t bit(Region r) { return std::uint8_t(1U << static_cast<int>(r)); }

constexpr std::uint8_t set(std::initializer_list<Region> rs) {
  std::uint8_t m = 0;
  for (Region r : rs) m |= bit(r);
  return m;
}

using enum Region;

// w1..w16.
constexpr std::array<std::uint8_t, 16> kStandardOrder{
    set({R1, R2, R3, R4}), set({R1, R2, R3}), set({R1, R2, R4}), set({R1, R3, R4}),
    set({R2, R3, R4}),     set({R1, R2}),     set({R1, R3}),     set({R2, R3}),
    set({R1, R4}),         set({R2, R4}),     set({R3, R4}),     set({R1}),
    set({R2}),             set({R3}),         set({R4}),         set({}),
};

bool exists_region(RegionModel m, SignedTerm t) {
  for (Region r : kAllRegions)
    if (m.has(r) && satisfies(r, t)) return true;
  return false;
}

}  // namespace

RegionModel::RegionModel(std::initializer_list<Region> regions) : mask_(set(regions)) {}

int RegionModel::index() const {
  auto it = std::find(kStandardOrder.begin(), kStandardOrder.end(), mask_);
  return static_cast<int>(it - kStandardOrder.begin()) + 1;
}

std::string RegionModel::name() const { return "w" + std::to_string(index()); }

std::string RegionModel::regions_text() const {
  static constexpr const char* kRoman[] = {"(i)", "(ii)", "(iii)", "(iv)"};
  std::string s = "{";
  bool first = true;
  for (Region r : kAllRegions) {
    if (!has(r)) continue;
    if (!first) s += ",";
    s += kRoman[static_cast<int>(r)];
    first = false;
  }
  return s + "}";
}

std::optional<RegionModel> RegionModel::from_name(std::string_view name) {
  if (name.size() < 2 || name.size() > 3 || name.front() != 'w') return std::nullopt;
  int k = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    k = k * 10 + (c - '0');
  }
  if (k < 1 || k > 16 || (name[1] == '0')) return std::nullopt;
  return RegionModel(kStandardOrder[k - 1]);
}

ModelUniverse::ModelUniverse(std::vector<RegionModel> models) : models_(std::move(models)) {
  std::array<bool, 16> seen{};
  for (RegionModel m : models_) {
    if (seen[m.mask()]) throw std::invalid_argument("duplicate model " + m.name());
    seen[m.mask()] = true;
  }
}

std::vector<std::string> ModelUniverse::names() const {
  std::vector<std::string> out;
  out.reserve(models_.size());
  for (RegionModel m : models_) out.push_back(m.name());
  return out;
}

const ModelUniverse& all_models() {
  static const ModelUniverse universe = [] {
    std::vector<RegionModel> ms;
    for (std::uint8_t m : kStandardOrder) ms.emplace_back(m);
    return ModelUniverse(std::move(ms));
  }();
  return universe;
}

bool evaluate(const Formula& f, RegionModel m) {
  switch (f.kind()) {
    case Formula::Kind::ExistsTerm:
      return exists_region(m, f.term());
    case Formula::Kind::ExistsPair: {
      Region r = region_of(f.term().positive, f.second_term().positive);
      return m.has(r);
    }
    case Formula::Kind::Not:
      return !evaluate(f.lhs(), m);
    case Formula::Kind::And:
      return evaluate(f.lhs(), m) && evaluate(f.rhs(), m);
    case Formula::Kind::Or:
      return evaluate(f.lhs(), m) || evaluate(f.rhs(), m);
  }
  throw UnsupportedForm("unknown formula node");
}

Bitstring bitstring(const Formula& f, const ModelUniverse& u) {
  Bitstring b(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) b.set(k, evaluate(f, u[k]));
  return b;
}

bool satisfies(RegionModel m, Constraint c) {
  return exists_region(m, c.term) == c.nonempty;
}

ModelUniverse restrict(const ModelUniverse& u, std::span<const Constraint> constraints) {
  std::vector<RegionModel> kept;
  for (RegionModel m : u) {
    bool ok = std::all_of(constraints.begin(), constraints.end(),
                          [m](Constraint c) { return satisfies(m, c); });
    if (ok) kept.push_back(m);
  }
  return ModelUniverse(std::move(kept));
}

ModelUniverse restrict(const ModelUniverse& u, std::initializer_list<Constraint> constraints) {
  return restrict(u, std::span<const Constraint>(constraints.begin(), constraints.size()));
}

std::vector<FiniteUniverse> enumerate_universes(int max_size) {
  if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  std::vector<FiniteUniverse> out;
  for (int n = 0; n <= max_size; ++n) {
    std::vector<Region> elems(static_cast<std::size_t>(n), Region::R1);
    // Odometer over 4^n assignments.
    while (true) {
      out.push_back({elems});
      int i = n - 1;
      while (i >= 0 && elems[i] == Region::R4) {
        elems[i] = Region::R1;
        --i;
      }
      if (i < 0) break;
      elems[i] = static_cast<Region>(static_cast<int>(elems[i]) + 1);
    }
  }
  return out;
}

RegionModel regions_of(const FiniteUniverse& fu) {
  std::uint8_t mask = 0;
  for (Region r : fu.elements) mask |= bit(r);
  return RegionModel(mask);
}

namespace {

struct Element {
  bool in_a;
  bool in_b;

  bool holds(SignedTerm t) const {
    return (t.base == Pred::A ? in_a : in_b) == t.positive;
  }
};

bool evaluate_direct(const Formula& f, std::span<const Element> domain) {
  switch (f.kind()) {
    case Formula::Kind::ExistsTerm:
      return std::any_of(domain.begin(), domain.end(),
                         [&](const Element& x) { return x.holds(f.term()); });
    case Formula::Kind::ExistsPair:
      return std::any_of(domain.begin(), domain.end(), [&](const Element& x) {
        return x.holds(f.term()) && x.holds(f.second_term());
      });
    case Formula::Kind::Not:
      return !evaluate_direct(f.lhs(), domain);
    case Formula::Kind::And:
      return evaluate_direct(f.lhs(), domain) && evaluate_direct(f.rhs(), domain);
    case Formula::Kind::Or:
      return evaluate_direct(f.lhs(), domain) || evaluate_direct(f.rhs(), domain);
  }
  throw UnsupportedForm("unknown formula node");
}

}  // namespace

bool evaluate_direct(const Formula& f, const FiniteUniverse& fu) {
  std::vector<Element> domain;
  domain.reserve(fu.size());
  for (Region r : fu.elements)
    domain.push_back({r == Region::R1 || r == Region::R2, r == Region::R1 || r == Region::R3});
  return evaluate_direct(f, domain);
}

}  // namespace catprop
