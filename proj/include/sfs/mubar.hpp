#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfs/matrix.hpp"
#include "sfs/partition.hpp"
#include "sfs/plumbing.hpp"

namespace sfs {

/// Sorted vertex indices whose indicator vector w satisfies Q w = diag(Q) mod 2.
using CharacteristicSubset = std::vector<std::size_t>;

bool is_characteristic(const IntMatrix& q, const CharacteristicSubset& c);

/// Every solution of the mod-2 system, each checked to be an isolated set.
/// Sorted lexicographically as index lists.
std::vector<CharacteristicSubset> characteristic_subsets(const PlumbingGraph& g, const IntMatrix& q);

/// |Gamma| - w^T Q w; rejects non-characteristic input.
BigInt mubar(const PlumbingGraph& g, const IntMatrix& q, const CharacteristicSubset& c);

struct SpinValue {
  CharacteristicSubset subset;
  BigInt mubar;
};

/// (subset, mubar) for every spin structure of a genus 0 space with eps > 0.
std::vector<SpinValue> spin_mubar_table(const StandardForm& s);

enum class CheckStatus { Pass, Fail, NotApplicable };
std::string to_string(CheckStatus s);

struct ConditionCheck {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string witness;
};

struct MubarConditions {
  long dim_h1_z2 = 0;
  std::size_t spin_structures = 0;
  std::size_t vanishing = 0;
  std::vector<ConditionCheck> checks;

  bool obstructed() const;
  const ConditionCheck* first_failure() const;
};

/// Reason a single partition violates the even-fiber conditions, or nullopt.
std::optional<std::string> even_fiber_violation(const StandardForm& s, const Partition& p, std::size_t deficit);

/// Reason a partition contains a forbidden {p/q, r/s, pr} class with pr even.
std::optional<std::string> product_class_violation(const StandardForm& s, const Partition& p, std::size_t deficit);

/// Combined per-partition filter for the refined partition search.
PartitionFilter spin_partition_filter(const StandardForm& s);

/// Requires genus 0 and eps > 0; throws std::invalid_argument otherwise.
MubarConditions mubar_embedding_conditions(const StandardForm& s,
                                           const std::optional<PartitionPair>& partitions = std::nullopt);

}  // namespace sfs
