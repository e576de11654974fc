#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfs/matrix.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

/// Z^free_rank + Z/d_1 + ... + Z/d_m with d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<BigInt> invariant_factors;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

  BigInt torsion_order() const;
  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// "Z^r + Z/d1 + ...", or "0" for the trivial group.
  std::string str() const;

  /// Canonical group from a list of cyclic orders (0 means Z, 1 is dropped).
  static AbelianGroup from_cyclic(const std::vector<BigInt>& orders, long extra_free = 0);
};

/// Cokernel of an m x n integer matrix viewed as a map Z^n -> Z^m.
AbelianGroup cokernel(const IntMatrix& m);

/// The block presentation: g zero 2x2 blocks and the (k+1)x(k+1) star block.
IntMatrix presentation_matrix(const SeifertData& s);

AbelianGroup h1_oracle(const SeifertData& s);
AbelianGroup h1_formula(const SeifertData& s);
AbelianGroup h1_formula(const StandardForm& s);

/// gcd over all t-element products of `values`, for t = 0..n (subset iteration).
std::vector<BigInt> subset_product_gcds_naive(const std::vector<BigInt>& values);
/// Same table via the recurrence G(S+x, t) = gcd(G(S, t), x * G(S, t-1)).
std::vector<BigInt> subset_product_gcds(const std::vector<BigInt>& values);

/// Exponents of the p-primary part of tor H_1; requires eps != 0.
std::vector<long> p_primary(const StandardForm& s, unsigned long prime);

bool is_direct_double(const AbelianGroup& g);

/// dim H^1(Y; Z/2) for genus 0 and eps != 0.
long dim_h1_z2(const StandardForm& s);

enum class SumLawStatus {
  Pass,
  // precondition failures
  InvalidPartition,
  EmptyClass,
  ClassSumAboveOne,
  TooManyClasses,
  NonPositiveEpsilon,
  // conclusion failures
  WrongClassCount,
  StrictClassCount,
  WrongDeficit,
  GcdNotOne,
};

std::string to_string(SumLawStatus s);

struct SumLawResult {
  SumLawStatus status = SumLawStatus::Pass;
  std::optional<std::size_t> offending_class;
  bool direct_double = false;
  std::string detail;

  bool ok() const { return status == SumLawStatus::Pass; }
  bool precondition_failed() const {
    return status >= SumLawStatus::InvalidPartition && status <= SumLawStatus::NonPositiveEpsilon;
  }
};

/// Checks the class-sum law that partitions from an embedding must obey.
SumLawResult partition_sum_law(const StandardForm& s, const Partition& p);

}  // namespace sfs
