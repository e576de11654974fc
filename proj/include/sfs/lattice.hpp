#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfs/matrix.hpp"
#include "sfs/plumbing.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

/// Row i is the image of vertex i in the orthonormal basis e_1..e_N.
struct LatticeEmbedding {
  std::vector<std::vector<long>> rows;

  std::size_t vertices() const { return rows.size(); }
  std::size_t ambient() const { return rows.empty() ? 0 : rows[0].size(); }
  IntMatrix matrix() const;
  /// Column signs fixed (first nonzero positive), columns sorted descending lexicographically.
  LatticeEmbedding canonical() const;
  friend auto operator<=>(const LatticeEmbedding&, const LatticeEmbedding&) = default;
};

/// A * A^T == Q.
bool preserves_pairing(const LatticeEmbedding& a, const IntMatrix& q);

struct LatticeSearchOptions {
  /// Fix the central vertex to e_1 + ... + e_e and force leading vertices to
  /// meet those coordinates in a single -1.
  bool structure = false;
  /// Prune with the chain inequality (reciprocal sums over a unit vector <= 1).
  bool chain_pruning = true;
  std::size_t ambient = 0;  // 0 means |Gamma|
  std::uint64_t node_budget = 10'000'000;
  std::size_t max_results = 0;  // 0 means unlimited
};

struct LatticeSearchResult {
  std::vector<LatticeEmbedding> embeddings;  // canonical, sorted, deduplicated
  bool budget_exceeded = false;
  bool truncated = false;
  std::uint64_t nodes = 0;
};

/// All embeddings of (Z^n, Q_Gamma) into (Z^N, Id) up to signed column permutation.
LatticeSearchResult enumerate_embeddings(const PlumbingGraph& g, const LatticeSearchOptions& opts = {});

/// Embeddings of a bare positive definite form; no chain pruning or structure.
LatticeSearchResult enumerate_embeddings(const IntMatrix& q, const LatticeSearchOptions& opts = {});

struct InducedPartition {
  Partition classes;        // sorted by least element
  std::size_t deficit = 0;  // index into classes
};

struct StructureError : std::runtime_error {
  StructureError(const std::string& what, long vertex, long column)
      : std::runtime_error(what), vertex(vertex), column(column) {}
  long vertex;
  long column;
};

/// Reads the partition off an embedding whose central row is e_1 + ... + e_e.
/// Throws StructureError naming the offending vertex/basis pair.
InducedPartition induced_partition(const LatticeEmbedding& a, const StandardForm& s);

/// (A1 | A2) maps Z^{2N} onto Z^n.
bool pair_surjective(const LatticeEmbedding& a1, const LatticeEmbedding& a2);

/// No nonempty union of complementary classes of p1 equals a union of
/// complementary classes of p2.
bool complementary_union_check(const Partition& p1, std::size_t deficit1, const Partition& p2,
                               std::size_t deficit2);

}  // namespace sfs
