#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pml/graph.hpp"

namespace pml {

struct Barrier {
  VertexSet vertices;
  std::vector<VertexSet> odd_components;
};

struct TwoSeparation {
  VertexId u = -1;
  VertexId v = -1;
  VertexSet first_even_component;  // U1
  Cut cut_u;                       // delta(U1 + u)
  Cut cut_v;                       // delta(U1 + v)
};

/// Pairs {u,v} (u < v) whose removal leaves at least two even components.
std::vector<TwoSeparation> two_separations(const MultiGraph& g);

/// Classes of x ~ y iff G - x - y has no perfect matching, ordered by smallest member.
std::vector<VertexSet> maximal_barriers(const MultiGraph& g);
/// The barrier through a class together with the odd components of G - B.
Barrier barrier_with_components(const MultiGraph& g, const VertexSet& b);

struct CutSearchOptions {
  /// When set, candidate cuts are tried in an order shuffled by this seed.
  std::optional<std::uint64_t> shuffle_seed;
};

/// A nontrivial tight cut from a maximal barrier, a 2-separation or (bipartite only)
/// a Hall obstruction; every candidate is re-verified with is_tight_cut.
std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g, const CutSearchOptions& opt = {});

enum class LeafKind { Brick, Brace };

struct DecompositionNode {
  MultiGraph graph;
  std::vector<EdgeId> edge_map_to_parent;  // empty at the root
  std::vector<EdgeId> edge_map_to_root;
  int parent = -1;
  bool leaf = true;
  LeafKind kind = LeafKind::Brace;
  Cut cut;               // internal nodes only
  int children[2] = {-1, -1};  // [0] shrinks the shore, [1] shrinks its complement
  VertexId contracted = -1;    // vertex the shrunk side became (non-root)
  std::vector<VertexSet> preimage;  // node vertex -> root vertices it stands for
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;  // nodes[0] is the root
  std::vector<int> leaves() const;
  int brick_count() const;
  int brace_count() const;
  /// Shore of an internal node's cut expressed in root vertices (a tight cut of the root).
  VertexSet root_shore(int node) const;
};

/// Recursive tight cut decomposition. Requires g matching covered.
DecompositionTree tight_cut_decomposition(const MultiGraph& g, const CutSearchOptions& opt = {});

/// Connected components as induced subgraphs (edge_map into g).
std::vector<ContractionResult> component_graphs(const MultiGraph& g);

/// Sum over components; each component must be matching covered.
int brick_count(const MultiGraph& g);
int polytope_dimension(const MultiGraph& g);
int lattice_dimension(const MultiGraph& g);

/// Underlying simple graph is the Petersen graph (10 vertices, cubic, girth 5).
bool is_petersen_graph(const MultiGraph& g);

}  // namespace pml
