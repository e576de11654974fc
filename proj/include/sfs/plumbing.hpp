#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sfs/matrix.hpp"
#include "sfs/seifert.hpp"

namespace sfs {

/// Star-shaped plumbing tree. Vertex 0 is central; then each arm in fiber
/// order, root (adjacent to the centre) to leaf.
struct PlumbingGraph {
  long genus = 0;
  BigInt central_weight = 0;
  std::vector<NegCFrac> arms;

  std::size_t vertex_count() const;
  /// Index of the first (leading) vertex of arm i.
  std::size_t arm_start(std::size_t i) const;
  std::vector<BigInt> weights() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// For each vertex, the arm it lies on, or -1 for the centre.
  std::vector<long> arm_of_vertex() const;

  /// "vertex <i> <weight>" lines followed by "edge <u> <v>" lines.
  std::string to_text() const;
};

PlumbingGraph build_plumbing(const StandardForm& s);

IntMatrix intersection_form(const PlumbingGraph& g);

bool is_positive_definite(const IntMatrix& q);

}  // namespace sfs
