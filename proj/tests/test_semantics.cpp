#include <gtest/gtest.h>

#include <set>

#include "catprop/commitment.hpp"
#include "catprop/errors.hpp"
#include "catprop/semantics.hpp"

using namespace catprop;

namespace {

using R = Region;

Formula letter(Letter l) { return canonical(l); }

std::vector<std::string> names(const ModelUniverse& u) { return u.names(); }

}  // namespace

TEST(Regions, RegionOf) {
  EXPECT_EQ(region_of(true, true), R::R1);
  EXPECT_EQ(region_of(true, false), R::R2);
  EXPECT_EQ(region_of(false, true), R::R3);
  EXPECT_EQ(region_of(false, false), R::R4);
  EXPECT_TRUE(satisfies(R::R2, kA));
  EXPECT_TRUE(satisfies(R::R2, ~kB));
  EXPECT_FALSE(satisfies(R::R3, kA));
}

TEST(Models, StandardOrder) {
  const ModelUniverse& u = all_models();
  ASSERT_EQ(u.size(), 16u);
  EXPECT_EQ(u[0], (RegionModel{R::R1, R::R2, R::R3, R::R4}));
  EXPECT_EQ(u[1], (RegionModel{R::R1, R::R2, R::R3}));
  EXPECT_EQ(u[5], (RegionModel{R::R1, R::R2}));
  EXPECT_EQ(u[8], (RegionModel{R::R1, R::R4}));
  EXPECT_EQ(u[11], (RegionModel{R::R1}));
  EXPECT_EQ(u[14], (RegionModel{R::R4}));
  EXPECT_EQ(u[15], RegionModel{});
  for (std::size_t k = 0; k < u.size(); ++k) {
    EXPECT_EQ(u[k].index(), static_cast<int>(k) + 1);
    EXPECT_EQ(u[k].name(), "w" + std::to_string(k + 1));
    EXPECT_EQ(RegionModel::from_name(u[k].name()), u[k]);
  }
  EXPECT_EQ(u[0].regions_text(), "{(i),(ii),(iii),(iv)}");
  EXPECT_EQ(u[15].regions_text(), "{}");
}

TEST(Models, FromNameRejectsJunk) {
  EXPECT_FALSE(RegionModel::from_name("w0").has_value());
  EXPECT_FALSE(RegionModel::from_name("w17").has_value());
  EXPECT_FALSE(RegionModel::from_name("w").has_value());
  EXPECT_FALSE(RegionModel::from_name("x1").has_value());
}

TEST(Models, UniverseRejectsDuplicates) {
  EXPECT_THROW(ModelUniverse({RegionModel{R::R1}, RegionModel{R::R1}}), std::invalid_argument);
}

TEST(Evaluate, Examples) {
  const ModelUniverse& u = all_models();
  EXPECT_TRUE(evaluate(letter(Letter::I), u[11]));
  EXPECT_TRUE(evaluate(letter(Letter::A), u[15]));
  EXPECT_TRUE(evaluate(letter(Letter::E), u[15]));
  EXPECT_FALSE(evaluate(letter(Letter::O), u[15]));
  EXPECT_FALSE(evaluate(letter(Letter::I), u[15]));
}

TEST(Bitstrings, CanonicalForms) {
  const ModelUniverse& u = all_models();
  EXPECT_EQ(bitstring(letter(Letter::A), u).to_string(), "0001001010110111");
  EXPECT_EQ(bitstring(letter(Letter::I), u).to_string(), "1111011010010000");
  EXPECT_TRUE(bitstring(ex(kA) | !ex(kA), u).all());
  EXPECT_TRUE(bitstring(ex(kA) & !ex(kA), u).none());
}

TEST(Bitstrings, TruthConditionsByRegion) {
  const ModelUniverse& u = all_models();
  for (std::size_t k = 0; k < u.size(); ++k) {
    EXPECT_EQ(evaluate(letter(Letter::A), u[k]), !u[k].has(R::R2));
    EXPECT_EQ(evaluate(letter(Letter::E), u[k]), !u[k].has(R::R1));
    EXPECT_EQ(evaluate(letter(Letter::Ap), u[k]), !u[k].has(R::R3));
    EXPECT_EQ(evaluate(letter(Letter::Ip), u[k]), u[k].has(R::R4));
  }
}

TEST(Bitstrings, Operations) {
  Bitstring x = Bitstring::from_string("0110");
  Bitstring y = Bitstring::from_string("0011");
  EXPECT_EQ((x & y).to_string(), "0010");
  EXPECT_EQ((x | y).to_string(), "0111");
  EXPECT_EQ((~x).to_string(), "1001");
  EXPECT_EQ(x.count(), 2u);
  EXPECT_THROW(x & Bitstring::from_string("01"), LengthMismatch);
  EXPECT_THROW(Bitstring::from_string("01x"), std::invalid_argument);
  EXPECT_TRUE(Bitstring().empty());
}

TEST(Restrict, Examples) {
  const ModelUniverse& u = all_models();
  ModelUniverse a = restrict(u, {nonempty(kA)});
  EXPECT_EQ(names(a), (std::vector<std::string>{"w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8",
                                                "w9", "w10", "w12", "w13"}));
  ModelUniverse normal = restrict(u, {nonempty(kA), nonempty(~kA), nonempty(kB), nonempty(~kB)});
  EXPECT_EQ(names(normal), (std::vector<std::string>{"w1", "w2", "w3", "w4", "w5", "w8", "w9"}));
  EXPECT_TRUE(restrict(u, {nonempty(kA), empty(kA)}).empty());
  EXPECT_EQ(restrict(u, {}).size(), 16u);
}

TEST(Restrict, FullTerm) {
  ModelUniverse full_b = restrict(all_models(), {full(kB)});
  for (RegionModel m : full_b) {
    EXPECT_FALSE(m.has(R::R2));
    EXPECT_FALSE(m.has(R::R4));
  }
  EXPECT_EQ(full_b.size(), 4u);
}

TEST(FiniteUniverses, Enumeration) {
  EXPECT_EQ(enumerate_universes(0).size(), 1u);
  EXPECT_EQ(enumerate_universes(1).size(), 5u);
  EXPECT_EQ(enumerate_universes(2).size(), 21u);
  EXPECT_EQ(enumerate_universes(4).size(), 341u);
  EXPECT_EQ(enumerate_universes(0)[0].size(), 0u);
}

TEST(FiniteUniverses, EveryRegionModelIsRealized) {
  std::set<std::uint8_t> seen;
  for (const auto& fu : enumerate_universes(4)) seen.insert(regions_of(fu).mask());
  EXPECT_EQ(seen.size(), 16u);
}

TEST(FiniteUniverses, RegionsOf) {
  EXPECT_EQ(regions_of(FiniteUniverse{}), RegionModel{});
  EXPECT_EQ(regions_of(FiniteUniverse{{R::R2}}).name(), "w13");
  EXPECT_EQ(regions_of(FiniteUniverse{{R::R1, R::R2, R::R3, R::R4}}).name(), "w1");
  EXPECT_EQ(regions_of(FiniteUniverse{{R::R3, R::R3}}), (RegionModel{R::R3}));
}

TEST(FiniteUniverses, DirectEvaluation) {
  EXPECT_TRUE(evaluate_direct(letter(Letter::A), FiniteUniverse{}));
  EXPECT_TRUE(evaluate_direct(letter(Letter::I), FiniteUniverse{{R::R1}}));
  EXPECT_FALSE(evaluate_direct(parse_canonical("A[A!]"), FiniteUniverse{{R::R2}}));
  EXPECT_TRUE(evaluate_direct(parse_canonical("A[A!]"), FiniteUniverse{{R::R1, R::R3}}));
  EXPECT_TRUE(evaluate_direct(ex(kA) | ex(kB), FiniteUniverse{{R::R3}}));
}
