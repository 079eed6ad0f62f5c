#pragma once

// Text input helpers and JSON / CSV / DOT serialization.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "catprop/catalog.hpp"
#include "catprop/opposition.hpp"
#include "catprop/semantics.hpp"
#include "catprop/syntax.hpp"

namespace catprop {

using json = nlohmann::ordered_json;

/// "A", "~A", "B", "~B"; throws UnknownName.
SignedTerm parse_term(std::string_view text);

/// Universe selector:
///   all16                          the 16 models in standard order
///   nonempty:A,empty:~B,full:B     restriction of all16 (T in A, ~A, B, ~B)
///   w1,w4,w9                       explicit model list
/// An empty selector means all16. Throws UnknownName.
ModelUniverse parse_models(std::string_view spec);

enum class InputSyntax { Auto, Name, FolDsl, Tl };

/// "auto", "name", "fol-dsl", "tl"; throws UnknownName.
InputSyntax input_syntax_from_name(std::string_view name);

struct NamedFormula {
  std::string label;
  Formula formula;
};

/// Auto tries a proposition name, then tl, then fol-dsl; the fol-dsl error
/// is reported when nothing matches.
NamedFormula read_formula(std::string_view text, InputSyntax syntax = InputSyntax::Auto);

json to_json(const ModelUniverse& u);
json to_json(const SequentReport& r);
json to_json(const SquareReport& r);
json to_json(const Partition& p, const std::vector<NamedFormula>& fs);
json to_json(const ExtendedProposition& p, const ModelUniverse& u);

/// Header row and column are the labels; cells are relation names.
void write_csv(std::ostream& os, const std::vector<std::string>& labels,
               const RelationMatrix& m);

/// Opposition graph: contradiction dashed, contrariety solid, subcontrariety
/// dotted, subalternation directed; unconnected and degenerate pairs omitted.
void write_dot(std::ostream& os, const std::vector<std::string>& labels,
               const RelationMatrix& m);

/// One cluster per square.
void write_dot(std::ostream& os, const std::vector<SquareReport>& squares);

}  // namespace catprop
