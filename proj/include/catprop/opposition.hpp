#pragma once

// Logical relations between bitstrings, model-adaptive partitions and the
// sequent checks of the theory of opposition.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catprop/bitstring.hpp"
#include "catprop/formula.hpp"
#include "catprop/semantics.hpp"

namespace catprop {

/// Relation of an ordered pair over a fixed universe. For the alternations
/// the direction runs from the first argument to the second:
/// `subalternation` means the first entails the second.
enum class Relation {
  equivalent,
  contradictory,
  contrary,
  subcontrary,
  subalternation,
  superalternation,
  unconnected,
  degenerate,
};

std::string_view to_string(Relation r);
std::optional<Relation> relation_from_name(std::string_view name);
/// The relation of (b, a) given that of (a, b).
Relation converse(Relation r);

/// Classifies a pair of equal-length bitstrings. Constant (all-ones or
/// all-zeros) operands that are not equal give `degenerate`, as do
/// zero-length operands. Throws LengthMismatch.
Relation relate(const Bitstring& b1, const Bitstring& b2);

/// Every 1-bit of b1 is a 1-bit of b2.
bool entails(const Bitstring& b1, const Bitstring& b2);
/// No position is 1 in both.
bool incompatible(const Bitstring& b1, const Bitstring& b2);

// ---------------------------------------------------------------------------
// Signature partitions

/// Disjoint, exhaustive, non-empty cells of a universe such that every
/// generating formula is constant on every cell.
struct Partition {
  ModelUniverse universe;
  /// Each cell lists indices into `universe`, ascending.
  std::vector<std::vector<std::size_t>> cells;
  /// Optional label formula per cell (empty when none were supplied).
  std::vector<Formula> anchors;

  std::vector<ModelUniverse> cell_models() const;
};

/// Groups the models of `u` by their truth-value signature on `fs`. Cells
/// appear in order of their first model unless `anchors` is given, in which
/// case anchor k must hold on exactly cell k's models (one anchor per cell).
/// Throws EmptyUniverse, AnchorMismatch.
Partition signature_partition(const std::vector<Formula>& fs, const ModelUniverse& u,
                              const std::vector<Formula>& anchors = {});

/// One bit per cell. Throws NotCellConstant if `f` splits a cell.
Bitstring partition_bitstring(const Formula& f, const Partition& p);

using RelationMatrix = std::vector<std::vector<Relation>>;

/// Throws EmptyUniverse.
RelationMatrix relation_table(const std::vector<Formula>& fs, const ModelUniverse& u);

/// `f` entails that something is `t`, over `u`.
bool has_import(const Formula& f, SignedTerm t, const ModelUniverse& u);

// ---------------------------------------------------------------------------
// Sequents

enum class SequentKind { entails, incompatible };

struct SequentSpec {
  std::string label;
  Formula premise;
  Formula conclusion;
  SequentKind kind = SequentKind::entails;
};

struct SequentReport {
  SequentSpec sequent;
  bool holds = false;
  std::vector<RegionModel> countermodels;
};

std::vector<SequentReport> verify_sequents(const std::vector<SequentSpec>& list,
                                           const ModelUniverse& u);

/// The fourteen entailments among A, E, I, O (negated premises and
/// conclusions written out).
std::vector<SequentSpec> aristotelian_sequents();
/// The same fourteen over A', E', I', O'.
std::vector<SequentSpec> keynesian_sequents();

}  // namespace catprop
