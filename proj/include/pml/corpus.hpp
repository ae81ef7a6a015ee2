#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pml/graph.hpp"

namespace pml::corpus {

struct NamedGraph {
  std::string name;
  MultiGraph graph;
};

/// Canonical adjacency code of the underlying simple graph (n <= 32): equal codes
/// iff isomorphic. Colour refinement plus individualisation, lexicographically
/// minimal leaf, with twin pruning.
std::vector<std::uint32_t> canonical_code(const MultiGraph& g);

/// One simple graph per isomorphism class on n vertices (by edge augmentation).
std::vector<MultiGraph> all_simple_graphs(int n);

/// Every connected matching covered simple graph on 2..max_n vertices (even),
/// one per isomorphism class, in canonical labelling.
std::vector<NamedGraph> exhaustive_matching_covered(int max_n);

/// Random cubic, near-cubic and bipartite regular matching covered graphs with
/// 6..max_n vertices, deduplicated up to isomorphism.
std::vector<NamedGraph> random_matching_covered(int count, int max_n, std::uint64_t seed);

/// C4, C6, K4, K3,3, prism, CL5, Petersen, Petersen + parallel spoke, K2.
std::vector<NamedGraph> named_family();

}  // namespace pml::corpus
