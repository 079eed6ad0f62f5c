#include <gtest/gtest.h>

#include "catprop/catalog.hpp"
#include "catprop/commitment.hpp"
#include "catprop/errors.hpp"
#include "catprop/opposition.hpp"

using namespace catprop;

namespace {

Formula L(Letter l) { return canonical(l); }

Bitstring bits(std::string_view s) { return Bitstring::from_string(s); }

ModelUniverse nonempty_a() { return restrict(all_models(), {nonempty(kA)}); }
ModelUniverse nonempty_not_a() { return restrict(all_models(), {nonempty(~kA)}); }
ModelUniverse normal_models() {
  return restrict(all_models(), {nonempty(kA), nonempty(~kA), nonempty(kB), nonempty(~kB)});
}

std::vector<std::vector<std::string>> cell_names(const Partition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cell : p.cell_models()) out.push_back(cell.names());
  return out;
}

std::vector<std::string> names(const std::vector<RegionModel>& ms) {
  std::vector<std::string> out;
  for (RegionModel m : ms) out.push_back(m.name());
  return out;
}

}  // namespace

TEST(Relate, Definitions) {
  EXPECT_EQ(relate(bits("0110"), bits("0110")), Relation::equivalent);
  EXPECT_EQ(relate(bits("0110"), bits("1001")), Relation::contradictory);
  EXPECT_EQ(relate(bits("0100"), bits("0010")), Relation::contrary);
  EXPECT_EQ(relate(bits("1101"), bits("1011")), Relation::subcontrary);
  EXPECT_EQ(relate(bits("0100"), bits("0110")), Relation::subalternation);
  EXPECT_EQ(relate(bits("0110"), bits("0100")), Relation::superalternation);
  EXPECT_EQ(relate(bits("1100"), bits("0110")), Relation::unconnected);
}

TEST(Relate, DegenerateOperands) {
  EXPECT_EQ(relate(bits("1111"), bits("0110")), Relation::degenerate);
  EXPECT_EQ(relate(bits("0110"), bits("0000")), Relation::degenerate);
  EXPECT_EQ(relate(bits("1111"), bits("0000")), Relation::degenerate);
  EXPECT_EQ(relate(bits("0000"), bits("0000")), Relation::equivalent);
  EXPECT_EQ(relate(Bitstring(), Bitstring()), Relation::degenerate);
}

TEST(Relate, LengthMismatch) {
  EXPECT_THROW(relate(bits("01"), bits("011")), LengthMismatch);
}

TEST(Relate, Examples) {
  const ModelUniverse& all = all_models();
  EXPECT_EQ(relate(bitstring(L(Letter::A), all), bitstring(L(Letter::O), all)),
            Relation::contradictory);
  ModelUniverse u = nonempty_a();
  EXPECT_EQ(relate(bitstring(L(Letter::A), u), bitstring(L(Letter::E), u)), Relation::contrary);
  EXPECT_EQ(relate(bitstring(L(Letter::A), all), bitstring(L(Letter::E), all)),
            Relation::unconnected);
}

TEST(Relate, ConverseAndNames) {
  for (Relation r : {Relation::equivalent, Relation::contradictory, Relation::contrary,
                     Relation::subcontrary, Relation::subalternation, Relation::superalternation,
                     Relation::unconnected, Relation::degenerate}) {
    EXPECT_EQ(converse(converse(r)), r);
    EXPECT_EQ(relation_from_name(to_string(r)), r);
  }
  EXPECT_EQ(converse(Relation::subalternation), Relation::superalternation);
  EXPECT_EQ(converse(Relation::contrary), Relation::contrary);
  EXPECT_FALSE(relation_from_name("opposite").has_value());
}

TEST(Entailment, Examples) {
  ModelUniverse u = nonempty_a();
  EXPECT_TRUE(entails(bitstring(L(Letter::A), u), bitstring(L(Letter::I), u)));
  const ModelUniverse& all = all_models();
  EXPECT_FALSE(entails(bitstring(L(Letter::A), all), bitstring(L(Letter::I), all)));
  Bitstring b = bits("0110");
  EXPECT_TRUE(incompatible(b, ~b));
  EXPECT_FALSE(incompatible(b, b));
  EXPECT_THROW(entails(bits("0"), bits("01")), LengthMismatch);
}

TEST(Partition, ThreeCellsAristotelian) {
  ModelUniverse u = nonempty_a();
  Partition p = signature_partition(aristotelian_set(), u,
                                    {L(Letter::A), L(Letter::I) & L(Letter::O), L(Letter::E)});
  using V = std::vector<std::string>;
  EXPECT_EQ(cell_names(p), (std::vector<V>{{"w4", "w7", "w9", "w12"},
                                           {"w1", "w2", "w3", "w6"},
                                           {"w5", "w8", "w10", "w13"}}));
  EXPECT_EQ(partition_bitstring(L(Letter::A), p).to_string(), "100");
  EXPECT_EQ(partition_bitstring(L(Letter::E), p).to_string(), "001");
  EXPECT_EQ(partition_bitstring(L(Letter::I), p).to_string(), "110");
  EXPECT_EQ(partition_bitstring(L(Letter::O), p).to_string(), "011");
}

TEST(Partition, UnanchoredCellsFollowFirstModel) {
  Partition p = signature_partition(aristotelian_set(), nonempty_a());
  ASSERT_EQ(p.cells.size(), 3u);
  EXPECT_EQ(p.cell_models()[0].names().front(), "w1");
  EXPECT_EQ(p.cell_models()[1].names().front(), "w4");
  EXPECT_TRUE(p.anchors.empty());
}

TEST(Partition, ThreeCellsKeynesian) {
  Partition p = signature_partition(keynesian_set(), nonempty_not_a(),
                                    {L(Letter::Ap), L(Letter::Ip) & L(Letter::Op), L(Letter::Ep)});
  EXPECT_EQ(partition_bitstring(L(Letter::Ap), p).to_string(), "100");
  EXPECT_EQ(partition_bitstring(L(Letter::Ep), p).to_string(), "001");
  EXPECT_EQ(partition_bitstring(L(Letter::Ip), p).to_string(), "110");
  EXPECT_EQ(partition_bitstring(L(Letter::Op), p).to_string(), "011");
}

TEST(Partition, SevenNormalCells) {
  std::vector<Formula> fs = aristotelian_set();
  for (const Formula& f : keynesian_set()) fs.push_back(f);
  std::vector<Formula> anchors = {
      L(Letter::A) & L(Letter::Ap),
      L(Letter::A) & L(Letter::Op),
      L(Letter::Ap) & L(Letter::O),
      ((L(Letter::I) & L(Letter::O)) & L(Letter::Ip)) & L(Letter::Op),
      L(Letter::I) & L(Letter::Ep),
      L(Letter::E) & L(Letter::Ip),
      L(Letter::E) & L(Letter::Ep),
  };
  Partition p = signature_partition(fs, normal_models(), anchors);
  using V = std::vector<std::string>;
  EXPECT_EQ(cell_names(p),
            (std::vector<V>{{"w9"}, {"w4"}, {"w3"}, {"w1"}, {"w2"}, {"w5"}, {"w8"}}));
  const char* expected[] = {"1100000", "0000011", "1111100", "0011111",
                            "1010000", "0000101", "1111010", "0101111"};
  for (std::size_t k = 0; k < fs.size(); ++k)
    EXPECT_EQ(partition_bitstring(fs[k], p).to_string(), expected[k]) << k;
}

TEST(Partition, TautologyGivesOneCell) {
  Partition p = signature_partition({ex(kA) | !ex(kA)}, all_models());
  ASSERT_EQ(p.cells.size(), 1u);
  EXPECT_EQ(p.cells[0].size(), 16u);
}

TEST(Partition, Errors) {
  EXPECT_THROW(signature_partition(aristotelian_set(), ModelUniverse{}), EmptyUniverse);
  EXPECT_THROW(signature_partition(aristotelian_set(), nonempty_a(), {L(Letter::A)}),
               AnchorMismatch);
  EXPECT_THROW(signature_partition(aristotelian_set(), nonempty_a(),
                                   {L(Letter::A), L(Letter::I), L(Letter::E)}),
               AnchorMismatch);
  Partition p = signature_partition(aristotelian_set(), nonempty_a());
  EXPECT_THROW(partition_bitstring(L(Letter::Ap), p), NotCellConstant);
}

TEST(RelationTable, Aristotelian) {
  RelationMatrix m = relation_table(aristotelian_set(), nonempty_a());
  for (int k = 0; k < 4; ++k) EXPECT_EQ(m[k][k], Relation::equivalent);
  EXPECT_EQ(m[0][1], Relation::contrary);
  EXPECT_EQ(m[0][3], Relation::contradictory);
  EXPECT_EQ(m[1][2], Relation::contradictory);
  EXPECT_EQ(m[0][2], Relation::subalternation);
  EXPECT_EQ(m[2][0], Relation::superalternation);
  EXPECT_EQ(m[1][3], Relation::subalternation);
  EXPECT_EQ(m[2][3], Relation::subcontrary);
}

TEST(RelationTable, Others) {
  RelationMatrix m = relation_table({L(Letter::A), L(Letter::Ap)}, normal_models());
  EXPECT_EQ(m[0][1], Relation::unconnected);
  RelationMatrix one = relation_table({L(Letter::A)}, all_models());
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0][0], Relation::equivalent);
  EXPECT_THROW(relation_table({L(Letter::A)}, ModelUniverse{}), EmptyUniverse);
}

TEST(Import, Examples) {
  const ModelUniverse& all = all_models();
  EXPECT_TRUE(has_import(L(Letter::I), kA, all));
  EXPECT_TRUE(has_import(L(Letter::O), kA, all));
  EXPECT_FALSE(has_import(L(Letter::A), kA, all));
  EXPECT_FALSE(has_import(L(Letter::E), kA, all));
  EXPECT_TRUE(has_import(parse_canonical("A[A!]"), kA, all));
  EXPECT_FALSE(has_import(parse_canonical("A[A?]"), kA, all));
  EXPECT_TRUE(has_import(L(Letter::A), kA, nonempty_a()));
}

TEST(Sequents, AristotelianHoldOverNonemptySubject) {
  auto list = aristotelian_sequents();
  ASSERT_EQ(list.size(), 14u);
  EXPECT_EQ(list.front().label, "A ⊢ ¬E");
  for (const auto& r : verify_sequents(list, nonempty_a()))
    EXPECT_TRUE(r.holds) << r.sequent.label;
}

TEST(Sequents, KeynesianHoldOverNonemptyComplement) {
  auto list = keynesian_sequents();
  ASSERT_EQ(list.size(), 14u);
  for (const auto& r : verify_sequents(list, nonempty_not_a()))
    EXPECT_TRUE(r.holds) << r.sequent.label;
}

TEST(Sequents, CountermodelsOverAllModels) {
  const ModelUniverse& all = all_models();
  auto reports = verify_sequents(
      {{"A ⊢ I", L(Letter::A), L(Letter::I), SequentKind::entails},
       {"A ⊥ E", L(Letter::A), L(Letter::E), SequentKind::incompatible},
       {"A ⊥ O", L(Letter::A), L(Letter::O), SequentKind::incompatible}},
      all);
  // Every model with nothing A: w11, w14, w15 and the empty model w16.
  EXPECT_FALSE(reports[0].holds);
  EXPECT_EQ(names(reports[0].countermodels),
            (std::vector<std::string>{"w11", "w14", "w15", "w16"}));
  EXPECT_FALSE(reports[1].holds);
  EXPECT_EQ(names(reports[1].countermodels),
            (std::vector<std::string>{"w11", "w14", "w15", "w16"}));
  EXPECT_TRUE(reports[2].holds);
}
