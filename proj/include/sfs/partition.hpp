#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sfs/homology.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

/// Two partitions of the fiber indices into e classes each; the deficit
/// index points at the unique class summing to 1 - 1/lcm.
struct PartitionPair {
  Partition p1, p2;
  std::size_t deficit1 = 0, deficit2 = 0;
  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

enum class Refutation {
  None,
  NotDirectDouble,
  NoComplementaryClass,
  NoDeficitClass,
  NoPartition,
  NoConnectedPair,
  BudgetExceeded,
};

std::string to_string(Refutation r);

/// Extra per-partition admissibility test (partition, index of its deficit class).
using PartitionFilter = std::function<bool(const Partition&, std::size_t)>;

struct PartitionSearchOptions {
  std::size_t max_k = 14;
  std::uint64_t node_budget = 20'000'000;
  PartitionFilter filter;
};

struct PartitionResult {
  std::optional<PartitionPair> witness;
  Refutation refutation = Refutation::None;
  std::string detail;
  std::size_t admissible_partitions = 0;
  std::uint64_t nodes = 0;

  bool partitionable() const { return witness.has_value(); }
};

/// All partitions into e classes with one deficit class and the rest summing
/// to 1, in lexicographic order of their class lists. Returns nullopt when the
/// node budget runs out.
std::optional<std::vector<std::pair<Partition, std::size_t>>> admissible_partitions(
    const StandardForm& s, std::uint64_t node_budget, std::uint64_t* nodes_used = nullptr);

/// True iff no nonempty proper subfamily of p1 has union equal to a union of
/// classes of p2 (equivalently the join of the two partitions is a single block).
bool unions_disjoint_condition(const Partition& p1, const Partition& p2, std::size_t k);

/// Searches for the lexicographically least witness pair.
PartitionResult is_partitionable(const StandardForm& s, const PartitionSearchOptions& opts = {});

/// Recomputes every defining condition of a witness; `why` receives the first failure.
bool validate_partition_pair(const StandardForm& s, const PartitionPair& w, std::string* why = nullptr);

/// e <= (k+1)/2.
bool bound_e(const StandardForm& s);

enum class FamilyTag { HalfBound, PairBase, PairBaseWithProduct };

std::string to_string(FamilyTag t);

struct FamilyMatch {
  FamilyTag tag;
  BigInt a;                       // HalfBound
  BigInt p, q, r, s;              // PairBase / PairBaseWithProduct
  std::size_t i = 0, j = 0;       // indices of p/q and r/s
  std::size_t product_pairs = 0;  // number of {pr, pr/(pr-1)} pairs
};

/// Recognizes the e=(k+1)/2 family and the two e=k/2 shapes, up to fiber order.
std::optional<FamilyMatch> match_theorem_families(const StandardForm& s);

struct ContractedWitness {
  char used_case = 0;  // 'p' complementary pairs, 's' singletons
  StandardForm form;
  PartitionPair witness;
  std::vector<std::size_t> removed;    // indices of s removed
  std::vector<std::size_t> index_map;  // new index -> old index
};

struct ExpansionStructure {
  bool pairs_case = false;      // m1 + m2 >= e
  bool singleton_case = false;  // both partitions contain a singleton class
  bool ratio_case = false;      // 5e >= 2k + 3
  std::size_t m1 = 0, m2 = 0;
  std::optional<ContractedWitness> reduction;
};

/// Detects which expansion hypotheses hold and, when one does, builds the
/// contracted space with its induced witness. Requires k >= 3 for a reduction.
ExpansionStructure expansion_structure(const StandardForm& s, const PartitionPair& w);

}  // namespace sfs
