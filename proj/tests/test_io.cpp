#include <gtest/gtest.h>

#include <sstream>

#include "catprop/errors.hpp"
#include "catprop/io.hpp"

using namespace catprop;

TEST(ParseModels, Selectors) {
  EXPECT_EQ(parse_models("all16"), all_models());
  EXPECT_EQ(parse_models(""), all_models());
  EXPECT_EQ(parse_models("nonempty:A").size(), 12u);
  EXPECT_EQ(parse_models("nonempty:A, nonempty:~A,nonempty:B,nonempty:~B").size(), 7u);
  EXPECT_EQ(parse_models("full:A"), restrict(all_models(), {full(kA)}));
  EXPECT_EQ(parse_models("empty:~B"), restrict(all_models(), {empty(~kB)}));
  EXPECT_EQ(parse_models("w16,w1").names(), (std::vector<std::string>{"w16", "w1"}));
}

TEST(ParseModels, Errors) {
  EXPECT_THROW(parse_models("w1,w1"), UnknownName);
  EXPECT_THROW(parse_models("w1,nonempty:A"), UnknownName);
  EXPECT_THROW(parse_models("nonempty:C"), UnknownName);
  EXPECT_THROW(parse_models("some:A"), UnknownName);
  EXPECT_THROW(parse_models("w99"), UnknownName);
}

TEST(ParseTerm, Terms) {
  EXPECT_EQ(parse_term("~B"), ~kB);
  EXPECT_THROW(parse_term("~~B"), UnknownName);
}

TEST(ReadFormula, AutoDetection) {
  NamedFormula n = read_formula("A[A!]");
  EXPECT_EQ(n.label, "A[A!]");
  EXPECT_EQ(n.formula, ex(kA) & canonical(Letter::A));
  EXPECT_EQ(read_formula("+(+A+B)").formula, canonical(Letter::I));
  EXPECT_EQ(read_formula("not ex(A & ~B)").formula, canonical(Letter::A));
  EXPECT_THROW(read_formula("ex()"), ParseError);
  EXPECT_THROW(read_formula("A[A!,A?]"), DuplicateCommitment);
}

TEST(ReadFormula, ExplicitSyntax) {
  EXPECT_THROW(read_formula("ex(A)", InputSyntax::Name), UnknownName);
  EXPECT_THROW(read_formula("A", InputSyntax::FolDsl), ParseError);
  EXPECT_EQ(read_formula("-(+A+B)", InputSyntax::Tl).formula, canonical(Letter::E));
  EXPECT_EQ(input_syntax_from_name("auto"), InputSyntax::Auto);
  EXPECT_THROW(input_syntax_from_name("latex"), UnknownName);
}

TEST(Json, Square) {
  auto f = aristotelian_set();
  json j = to_json(is_valid_square(f[0], f[1], f[2], f[3], all_models()));
  EXPECT_EQ(j["valid"], false);
  EXPECT_EQ(j["corners"]["U1"]["bitstring"], "0001001010110111");
  EXPECT_EQ(j["checks"]["contrary(U1,U2)"], false);
  EXPECT_EQ(j["checks"]["contradictory(U1,P2)"], true);
}

TEST(Json, Sequent) {
  auto reports = verify_sequents(
      {{"A ⊢ I", canonical(Letter::A), canonical(Letter::I), SequentKind::entails}}, all_models());
  json j = to_json(reports[0]);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["countermodels"], json::array({"w11", "w14", "w15", "w16"}));
}

TEST(Json, Extended) {
  json j = to_json(family_256()[0], all_models());
  EXPECT_EQ(j["name"], "A[A!,B!]");
  EXPECT_EQ(j["fol"], "ex(A) & ex(B) & not ex(A & ~B)");
  EXPECT_EQ(j["bitstring"].get<std::string>().size(), 16u);
}

TEST(Csv, RelationMatrix) {
  std::ostringstream os;
  write_csv(os, {"A", "E"}, relation_table({canonical(Letter::A), canonical(Letter::E)},
                                           restrict(all_models(), {nonempty(kA)})));
  EXPECT_EQ(os.str(), ",A,E\nA,equivalent,contrary\nE,contrary,equivalent\n");
}

TEST(Csv, QuotesFields) {
  std::ostringstream os;
  write_csv(os, {"A[A!,B?]"}, {{Relation::equivalent}});
  EXPECT_EQ(os.str(), ",\"A[A!,B?]\"\n\"A[A!,B?]\",equivalent\n");
}

TEST(Dot, RelationGraph) {
  std::ostringstream os;
  auto fs = aristotelian_set();
  write_dot(os, {"A", "E", "I", "O"}, relation_table(fs, restrict(all_models(), {nonempty(kA)})));
  std::string dot = os.str();
  EXPECT_NE(dot.find("digraph opposition"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1 [label=\"contrary\", style=solid, dir=none]"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n3 [label=\"contradictory\", style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n2 [label=\"subalternation\""), std::string::npos);
  EXPECT_NE(dot.find("n2 -> n3 [label=\"subcontrary\", style=dotted"), std::string::npos);
}

TEST(Dot, SuperalternationPointsDown) {
  std::ostringstream os;
  write_dot(os, {"I", "A"}, {{Relation::equivalent, Relation::superalternation},
                             {Relation::subalternation, Relation::equivalent}});
  EXPECT_NE(os.str().find("n1 -> n0 [label=\"subalternation\""), std::string::npos);
}

TEST(Dot, Squares) {
  std::ostringstream os;
  auto f = aristotelian_set();
  write_dot(os, {is_valid_square(f[0], f[1], f[2], f[3], all_models())});
  EXPECT_NE(os.str().find("subgraph cluster_0"), std::string::npos);
  EXPECT_NE(os.str().find("label=\"not ex(A & ~B)\""), std::string::npos);
}
