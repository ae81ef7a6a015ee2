#include "pml/bvnalg.hpp"

#include <algorithm>

#include "pml/matching.hpp"
#include "pml/tightcut.hpp"

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

EdgeSet without(const EdgeSet& s, EdgeId e) {
  EdgeSet out;
  for (EdgeId f : s)
    if (f != e) out.push_back(f);
  return out;
}

std::optional<VertexSolution> optimise_over_face(const MultiGraph& g, const EdgeSet& edges,
                                                 const RationalVector& objective, Sense sense) {
  LinearProgram lp = degree_lp(g, edges);
  lp.objective = objective;
  lp.sense = sense;
  auto s = simplex_solve(lp);
  if (s.status != LpStatus::Optimal) return std::nullopt;
  return s;
}

// A fractional vertex of P(g[face]) when PM(g[face]) has smaller dimension than the
// face: maximise x_f for edges outside the core, then push x(C) off 1 for the core's
// tight cuts.
std::optional<FractionalCertificate> probe_face(const MultiGraph& g, const EdgeSet& face) {
  const EdgeSet core = covered_within(g, face);
  const int m = g.num_edges();
  for (EdgeId f : face) {
    if (contains(core, f)) continue;
    RationalVector obj(ix(m), 0);
    obj[ix(f)] = 1;
    auto s = optimise_over_face(g, face, obj, Sense::Max);
    if (s && s->objective > 0) return extract_certificate(g, s->point);
  }
  const auto core_graph = edge_subgraph(g, core);
  for (const auto& comp : component_graphs(core_graph.graph)) {
    const auto tree = tight_cut_decomposition(comp.graph);
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      if (tree.nodes[i].leaf) continue;
      VertexSet shore;
      for (VertexId v : tree.root_shore(static_cast<int>(i))) {
        // comp vertices are the members of the component in ascending order
        for (VertexId p = 0; p < core_graph.graph.num_vertices(); ++p)
          if (comp.vertex_map[ix(p)] == v) shore.push_back(p);
      }
      std::sort(shore.begin(), shore.end());
      RationalVector obj(ix(m), 0);
      for (EdgeId e : boundary(g, shore))
        if (contains(face, e)) obj[ix(e)] = 1;
      for (Sense sense : {Sense::Min, Sense::Max}) {
        auto s = optimise_over_face(g, face, obj, sense);
        if (s && s->objective != 1) return extract_certificate(g, s->point);
      }
    }
  }
  return std::nullopt;
}

// Any fractional optimum of min / max x_e over the face.
std::optional<FractionalCertificate> fallback_probe(const MultiGraph& g, const EdgeSet& face) {
  for (EdgeId e : face) {
    RationalVector obj(ix(g.num_edges()), 0);
    obj[ix(e)] = 1;
    for (Sense sense : {Sense::Min, Sense::Max}) {
      auto s = optimise_over_face(g, face, obj, sense);
      if (s && !is_integral(s->point)) return extract_certificate(g, s->point);
    }
  }
  return std::nullopt;
}

}  // namespace

Lp1Result lp1_value(const MultiGraph& g, const EdgeSet& active, EdgeId e) {
  if (!contains(active, e)) throw InvalidArgument("LP1 edge is not active");
  LinearProgram lp = degree_lp(g, active);
  lp.free.assign(ix(g.num_edges()), 0);
  lp.free[ix(e)] = 1;
  lp.objective[ix(e)] = 1;
  lp.sense = Sense::Min;
  auto s = simplex_solve(lp);
  if (s.status == LpStatus::Infeasible)
    throw InvariantViolation("LP1 is infeasible on an edge set carrying a perfect matching");
  Lp1Result r;
  r.unbounded = s.status == LpStatus::Unbounded;
  if (!r.unbounded) r.value = s.objective;
  r.solution = std::move(s);
  return r;
}

EdgeSet covered_within(const MultiGraph& g, const EdgeSet& active) {
  const auto sub = edge_subgraph(g, active);
  EdgeSet out;
  for (EdgeId e : covered_edges(sub.graph)) out.push_back(sub.edge_map[ix(e)]);
  std::sort(out.begin(), out.end());
  return out;
}

int face_dimension(const MultiGraph& g, const EdgeSet& edges) {
  const auto sub = edge_subgraph(g, edges);
  if (!find_perfect_matching(sub.graph)) return -1;
  return polytope_dimension(sub.graph);
}

bool accept_step_edge(const MultiGraph& g, const EdgeSet& active, EdgeId e) {
  return face_dimension(g, covered_within(g, without(active, e))) == face_dimension(g, active) - 1;
}

BvnOutcome run_bvn(const MultiGraph& g) {
  if (!is_matching_covered(g).matching_covered) throw InvalidArgument("run_bvn needs a matching covered graph");
  BvnState state;
  state.active_edges.resize(ix(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) state.active_edges[ix(e)] = e;
  int dim = polytope_dimension(g);
  state.target_steps = dim;
  BvnBasis basis;
  while (dim > 0) {
    const EdgeSet& active = state.active_edges;
    EdgeId chosen = -1;
    EdgeSet next;
    // LP1 first. A nonnegativity facet of P(G[E_t]) whose matching face drops by more
    // than one dimension means P(G[E_t] - e) has fractional vertices.
    for (EdgeId e : active) {
      if (!lp1_value(g, active, e).negative()) continue;
      EdgeSet core = covered_within(g, without(active, e));
      const int d = face_dimension(g, core);
      if (d == dim - 1) {
        chosen = e;
        next = std::move(core);
        break;
      }
      if (auto cert = probe_face(g, without(active, e))) return *cert;
    }
    if (chosen < 0) {
      for (EdgeId e : active) {
        EdgeSet core = covered_within(g, without(active, e));
        if (face_dimension(g, core) == dim - 1) {
          chosen = e;
          next = std::move(core);
          break;
        }
      }
    }
    if (chosen < 0) {
      if (auto cert = fallback_probe(g, active)) return *cert;
      return BvnStuck{state, "no facet-defining nonnegativity constraint and no fractional vertex found"};
    }
    const auto sub = edge_subgraph(g, active);
    const auto local = std::find(sub.edge_map.begin(), sub.edge_map.end(), chosen) - sub.edge_map.begin();
    auto m = perfect_matching_with(sub.graph, {static_cast<EdgeId>(local)}, {});
    if (!m) throw InvariantViolation("accepted edge lies in no perfect matching");
    Matching y = pull_back(*m, sub.edge_map);
    state.collected.push_back({chosen, y});
    basis.matchings.push_back(y);
    basis.step_edges.push_back(chosen);
    const int d = face_dimension(g, next);
    if (d != dim - 1) throw InvariantViolation("accepted step did not lower the dimension by one");
    state.active_edges = std::move(next);
    dim = d;
  }
  const auto sub = edge_subgraph(g, state.active_edges);
  const auto all = enumerate_perfect_matchings(sub.graph, 2);
  if (all.size() != 1) throw InvariantViolation("zero-dimensional face does not have a unique perfect matching");
  basis.matchings.push_back(pull_back(all[0], sub.edge_map));
  return basis;
}

FractionalCertificate extract_certificate(const MultiGraph& g, const RationalVector& x) {
  if (static_cast<int>(x.size()) != g.num_edges()) throw InvalidArgument("point has wrong length");
  if (!is_half_integral(x)) throw InvariantViolation("point is not half-integral");
  if (is_integral(x)) throw InvalidArgument("point is integral");
  FractionalCertificate c;
  c.point = x;
  const Rational half(1, 2);
  std::vector<std::vector<EdgeId>> half_at(ix(g.num_vertices()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (x[ix(e)] == 1) c.integer_edges.push_back(e);
    if (x[ix(e)] == half) {
      c.half_edges.push_back(e);
      half_at[ix(g.edge(e).u)].push_back(e);
      half_at[ix(g.edge(e).v)].push_back(e);
    }
  }
  std::vector<char> used(ix(g.num_edges()), 0);
  std::vector<char> seen(ix(g.num_vertices()), 0);
  for (EdgeId e : c.integer_edges) {
    for (VertexId v : {g.edge(e).u, g.edge(e).v}) {
      if (seen[ix(v)] || !half_at[ix(v)].empty()) throw InvariantViolation("integer edges overlap");
      seen[ix(v)] = 1;
    }
  }
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (half_at[ix(s)].empty() || seen[ix(s)]) continue;
    std::vector<VertexId> cycle;
    VertexId v = s;
    for (;;) {
      if (half_at[ix(v)].size() != 2) throw InvariantViolation("half edges do not form disjoint cycles");
      seen[ix(v)] = 1;
      cycle.push_back(v);
      EdgeId next = -1;
      for (EdgeId e : half_at[ix(v)])
        if (!used[ix(e)]) {
          next = e;
          break;
        }
      if (next < 0) break;
      used[ix(next)] = 1;
      v = g.other(next, v);
      if (v == s) break;
    }
    if (cycle.size() % 2 == 0) throw InvariantViolation("half edges form an even cycle");
    c.odd_cycles.push_back(std::move(cycle));
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!seen[ix(v)]) throw InvariantViolation("point leaves a vertex uncovered");
  return c;
}

}  // namespace pml
