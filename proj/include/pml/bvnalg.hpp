#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pml/graph.hpp"
#include "pml/rational.hpp"
#include "pml/simplex.hpp"

namespace pml {

struct BvnState {
  EdgeSet active_edges;
  std::vector<std::pair<EdgeId, Matching>> collected;
  int target_steps = 0;
};

/// A half-integral vertex of a face of the bipartite relaxation that is not a
/// perfect matching.
struct FractionalCertificate {
  RationalVector point;                       // over all edge ids of the graph
  std::vector<std::vector<VertexId>> odd_cycles;  // vertex sequences carrying 1/2
  EdgeSet integer_edges;                      // edges carrying 1
  EdgeSet half_edges;                         // edges carrying 1/2
};

struct BvnBasis {
  std::vector<Matching> matchings;
  std::vector<EdgeId> step_edges;  // e_t for every step (the final matching has none)
};

struct BvnStuck {
  BvnState state;
  std::string reason;
};

using BvnOutcome = std::variant<BvnBasis, FractionalCertificate, BvnStuck>;

struct Lp1Result {
  Rational value;          // meaningful only when bounded
  bool unbounded = false;  // x_e can be pushed to -infinity (parallel copies, say)
  VertexSolution solution;
  bool negative() const { return unbounded || value < 0; }
};

/// min x_e subject to the degree constraints of G[E_t] and x_f >= 0 for f != e.
Lp1Result lp1_value(const MultiGraph& g, const EdgeSet& active, EdgeId e);

/// Edges of `active` lying in some perfect matching of the spanning subgraph g[active].
EdgeSet covered_within(const MultiGraph& g, const EdgeSet& active);
/// Component-summed polytope dimension of the spanning subgraph g[edges] (-1 when it
/// has no perfect matching); otherwise every component must be matching covered.
int face_dimension(const MultiGraph& g, const EdgeSet& edges);

/// Accept e iff the face {x_e = 0} of PM(G[E_t]) has dimension one less, measured on
/// the matching covered core of G[E_t] - e. LP1 < 0 alone is not enough off BvN graphs.
bool accept_step_edge(const MultiGraph& g, const EdgeSet& active, EdgeId e);

/// Facet descent. g must be matching covered.
BvnOutcome run_bvn(const MultiGraph& g);

/// Decomposes a half-integral point into integer edges and odd cycles; throws
/// InvariantViolation if a coordinate is outside {0, 1/2, 1} and InvalidArgument if the
/// point is integral.
FractionalCertificate extract_certificate(const MultiGraph& g, const RationalVector& x);

}  // namespace pml
