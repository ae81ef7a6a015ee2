#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pml {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::vector<VertexId>;  // always sorted, no duplicates
using EdgeSet = std::vector<EdgeId>;      // always sorted, no duplicates

/// Raised for malformed requests (bad vertex ids, overlapping includes, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal invariant that the construction guarantees is observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Edge id is the position in the edge
/// list; parallel edges are distinct edges. Self-loops are rejected.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n, std::vector<Edge> edges = {});

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  /// Incident edge ids of v in ascending order.
  std::span<const EdgeId> incident(VertexId v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A set of edge ids; incidence vectors index by edge id.
struct Matching {
  EdgeSet edges;
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

bool is_perfect_matching(const MultiGraph& g, const Matching& m);
std::vector<int> incidence_vector(const MultiGraph& g, const Matching& m);
bool contains(const EdgeSet& s, EdgeId e);
int intersection_size(const EdgeSet& a, const EdgeSet& b);

/// An odd (or not) cut delta(shore). The shore is normalised to the side that does
/// not contain vertex 0.
struct Cut {
  VertexSet shore;
  EdgeSet edges;
  bool odd = false;
  bool trivial = false;
  friend bool operator==(const Cut& a, const Cut& b) { return a.shore == b.shore; }
};

Cut make_cut(const MultiGraph& g, VertexSet shore);
VertexSet complement(const MultiGraph& g, const VertexSet& shore);
/// Edges with exactly one endpoint in the given set (not normalised).
EdgeSet boundary(const MultiGraph& g, const VertexSet& shore);

/// A graph derived from a parent, with the map from derived edge ids to parent ids.
struct EdgeMappedGraph {
  MultiGraph graph;
  std::vector<EdgeId> edge_map;
};

struct ContractionResult {
  MultiGraph graph;
  std::vector<VertexId> vertex_map;  // parent vertex -> contracted vertex
  std::vector<EdgeId> edge_map;      // contracted edge -> parent edge
  VertexId contracted = -1;          // the vertex that the shore became
};

/// Shrinks `shore` to one vertex. Surviving vertices keep their relative order and
/// the new vertex is last. Edges inside the shore are dropped; parallel edges stay.
ContractionResult contract(const MultiGraph& g, const VertexSet& shore);

/// Spanning subgraph keeping the listed edges (ascending order preserved).
EdgeMappedGraph edge_subgraph(const MultiGraph& g, const EdgeSet& keep);
/// Spanning subgraph without the listed edges.
EdgeMappedGraph delete_edges(const MultiGraph& g, const EdgeSet& drop);
/// Subgraph induced on vertex set, vertices relabelled in ascending order.
ContractionResult induced_subgraph(const MultiGraph& g, const VertexSet& vertices);

/// Connected components, each sorted, ordered by smallest member. Vertices with
/// removed[v] set are skipped.
std::vector<VertexSet> connected_components(const MultiGraph& g,
                                             const std::vector<char>& removed = {});
bool is_connected(const MultiGraph& g);
bool is_bipartite(const MultiGraph& g);

/// Pulls a matching of a derived graph back to the parent's edge ids.
Matching pull_back(const Matching& m, const std::vector<EdgeId>& edge_map);

std::string to_string(const Matching& m);
std::string to_string(const VertexSet& s);

}  // namespace pml
