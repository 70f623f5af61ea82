#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmtk/enumerate.hpp"
#include "fmtk/formula.hpp"
#include "fmtk/partition.hpp"
#include "fmtk/structure.hpp"

namespace fmtk {

/// Converts an equivalence relation into its partition of blocks.
/// Throws when the view is not an equivalence relation.
Partition partition_from_equivalence(const BinaryRelationView& v);

BinaryRelationView equivalence_from_partition(const Partition& p);

/// Compatibility of a partition with every non-equality relation of s:
/// tuples componentwise in the same blocks are either all in or all out.
/// The designated equality symbol is exempt: it stands for the identity
/// predicate under test, not for structural data.
bool congruence_compatible(const Structure& s, const Partition& p, std::string* why = nullptr);

/// Exact congruence test. Throws on a malformed partition.
bool is_congruence(const Structure& s, const Partition& p);

/// Every congruence of s, ordered by block count descending then by block
/// content. Brute force over set partitions; throws when n exceeds the cap.
std::vector<Partition> all_congruences(const Structure& s, int cap = 10);

/// Quotient of a source structure by a congruence: target elements are the
/// blocks indexed by least member, relations are tuple images, constants map
/// through. The image of an equality symbol interpreted as the congruence is
/// the target diagonal.
struct QuotientMap {
  Structure source;
  Structure target;
  std::vector<int> to_block;  // element -> target index
};

QuotientMap quotient(const Structure& s, const Partition& c);

struct TransferCounterexample {
  Formula formula;
  std::vector<int> assignment;  // values of the designated free variables
  bool source_value = false;
  bool target_value = false;
};

struct TransferReport {
  bool pass = true;
  long formulas_checked = 0;
  long long assignments_checked = 0;
  bool truncated = false;
  std::optional<TransferCounterexample> counterexample;
};

/// Sweeps enumerated formulas (two designated free variables) and every
/// assignment over the source domain, comparing source truth with target
/// truth under the block map. Equality atoms read each structure's own
/// interpretation, so a source equality interpreted as the congruence is
/// matched against the target diagonal. On failure the reported
/// counterexample is the canonically least failing representative.
TransferReport truth_transfer_check(const QuotientMap& qm, const EnumerationBudget& budget);

/// Serialization of a quotient: target structure file plus a map block.
std::string quotient_to_text(const QuotientMap& qm);

}  // namespace fmtk
