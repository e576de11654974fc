#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sfs/exactq.hpp"

namespace sfs {

/// Indices into a fiber list (0-based in the C++ API).
using IndexClass = std::vector<std::size_t>;
using Partition = std::vector<IndexClass>;

/// F_g(e; r_1, ..., r_k) with r_i = p_i/q_i in arbitrary form.
struct SeifertData {
  long genus = 0;
  BigInt central = 0;
  std::vector<Rational> fibers;
};

/// Normalized space: e >= 0 implied by eps >= 0, every fiber > 1.
struct StandardForm {
  long genus = 0;
  BigInt central = 0;
  std::vector<Rational> fibers;
  bool orientation_reversed = false;

  std::size_t k() const noexcept { return fibers.size(); }
  SeifertData data() const { return {genus, central, fibers}; }
};

/// Multiplicity p = |numerator| of a fiber fraction.
BigInt multiplicity(const Rational& r);
/// Signed q with q/p = 1/r.
BigInt fiber_q(const Rational& r);

Rational euler_invariant(const SeifertData& s);
Rational euler_invariant(const StandardForm& s);

StandardForm normalize(const SeifertData& s);

/// Appends complement(r_j) and r_j and increments e.
StandardForm expand(const StandardForm& s, std::size_t j);

struct Contraction {
  std::size_t j;               // fiber kept; equals one member of the removed pair
  std::size_t removed[2];      // the complementary pair that disappears
  StandardForm form;
};

/// All inverse expansions, one per distinct resulting fiber multiset.
std::vector<Contraction> find_contractions(const StandardForm& s);

/// Same genus, same e, same fiber multiset.
bool same_space(const StandardForm& a, const StandardForm& b);

/// Fibers sorted descending, used as a multiset key.
std::vector<Rational> sorted_fibers(const std::vector<Rational>& f);

std::string to_string(const SeifertData& s);
std::string to_string(const StandardForm& s);

/// Partition validity: disjoint nonempty classes covering 0..k-1.
bool is_partition_of(const Partition& p, std::size_t k);
Rational class_sum(const StandardForm& s, const IndexClass& c);
BigInt fiber_lcm(const StandardForm& s);

}  // namespace sfs
