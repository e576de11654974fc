#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfs/homology.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

/// P(c_1, ..., c_k) with every c_i odd. A knot exactly when k is odd.
struct OddPretzel {
  std::vector<long> strands;

  explicit OddPretzel(std::vector<long> c);
  std::size_t k() const { return strands.size(); }
  bool is_knot() const { return strands.size() % 2 == 1; }
  OddPretzel mirror() const;
  std::string str() const;
};

/// The +-1 strands fold into the central weight: S^2(-u; c_i with |c_i| > 1),
/// u the sum of the unit strands. |H_1| equals the knot determinant.
SeifertData double_branched_cover(const OddPretzel& k);

/// |sum_i prod_{j != i} c_j|, computed directly from the strands.
BigInt pretzel_determinant(const OddPretzel& k);

/// Sigma(K) reflected to eps > 0, read as S^2(m + e; a_1..a_n, b_1/(b_1-1)..b_m/(b_m-1)).
struct PretzelNormal {
  StandardForm form;
  long n = 0;     // integer fibers
  long m = 0;     // fibers b/(b-1)
  BigInt e;       // central weight minus m
  bool reflected = false;
};
PretzelNormal pretzel_normal(const OddPretzel& k);

/// n - m + 1 - e for the normal form above.
BigInt pretzel_mubar_formula(const OddPretzel& k);

/// mubar of the unique spin structure of Sigma(K), from the mod-2 solver.
/// Requires a knot; cross-checks the closed formula and throws std::logic_error on mismatch.
BigInt pretzel_mubar(const OddPretzel& k);

struct DoublySliceVerdict {
  bool doubly_slice = false;
  std::optional<long> a;  // P(a, -a, ..., a) up to mutation
  std::string failed;     // first failed condition, empty when doubly slice
  std::string detail;
};

/// Doubly slice up to mutation iff the strands are a permutation of
/// {a x (m+1), -a x m} with a odd, |a| >= 3. Requires a knot.
DoublySliceVerdict doubly_slice_classify(const OddPretzel& k);

/// Strands left after cancelling +1/-1 pairs.
OddPretzel cancel_unit_pairs(const OddPretzel& k);

/// Multiset test {a x (m+1), -a x m}, |a| >= 3 odd.
std::optional<long> pretzel_family_parameter(const std::vector<long>& strands);

/// Double cover of a quasi-alternating Montesinos link after reflection:
/// eps > 0, fibers > 1, and either e >= k or e = k-1 with the last two
/// reciprocals summing below 1.
struct MontesinosNormal {
  BigInt central;
  std::vector<Rational> fibers;
};

struct QaObstruction {
  int qa_case = 0;  // 1: e >= k, 2: e = k-1
  Partition partition;
  SumLawResult sum_law;
  bool direct_double = false;
};

/// Throws std::invalid_argument ("not in QA normal form") outside the two cases.
QaObstruction qa_montesinos_obstruction(const MontesinosNormal& m);

}  // namespace sfs
