#include "pml/basisbuild.hpp"

#include <algorithm>
#include <map>

#include "pml/bvnalg.hpp"
#include "pml/cutsearch.hpp"
#include "pml/matching.hpp"
#include "pml/tightcut.hpp"

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

Matching merge(const Matching& a, const Matching& b) {
  Matching m;
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(m.edges));
  return m;
}

std::string shape(const MultiGraph& g) {
  return "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges());
}

// The |C| = 1 composition rule applied to two disjoint components.
Basis product(const Basis& a, const Basis& b) {
  Basis out;
  for (const auto& y : b.matchings) out.matchings.push_back(merge(a.matchings.front(), y));
  for (std::size_t i = 1; i < a.matchings.size(); ++i)
    out.matchings.push_back(merge(a.matchings[i], b.matchings.front()));
  out.provenance = {"product", "", {a.provenance, b.provenance}};
  return out;
}

void check_size(const Basis& b, int expected, const std::string& where) {
  if (static_cast<int>(b.matchings.size()) != expected)
    throw InvariantViolation(where + ": basis has " + std::to_string(b.matchings.size()) +
                             " elements, lattice dimension is " + std::to_string(expected));
}

Basis node_basis(const DecompositionTree& tree, int i) {
  const auto& node = tree.nodes[ix(i)];
  if (node.leaf) {
    if (node.kind == LeafKind::Brick) return brick_basis(node.graph);
    auto out = run_bvn(node.graph);
    auto* b = std::get_if<BvnBasis>(&out);
    if (!b) throw InvariantViolation("run_bvn did not finish on a brace (" + shape(node.graph) + ")");
    return {b->matchings, {"bvn-run", "brace " + shape(node.graph), {}}};
  }
  const int a = node.children[0], c = node.children[1];
  Basis shore_side = lift(node_basis(tree, a), tree.nodes[ix(a)].edge_map_to_parent);
  Basis other_side = lift(node_basis(tree, c), tree.nodes[ix(c)].edge_map_to_parent);
  return compose(node.graph, node.cut, shore_side, other_side);
}

// Basis of a connected matching covered graph by folding its tight cut decomposition.
Basis covered_basis(const MultiGraph& g) {
  const auto tree = tight_cut_decomposition(g);
  Basis b = node_basis(tree, 0);
  check_size(b, lattice_dimension(g), "tight cut fold");
  return b;
}

}  // namespace

Basis petersen_basis(const MultiGraph& g) {
  if (!is_petersen_graph(g)) throw InvalidArgument("petersen_basis needs the Petersen graph");
  std::map<std::pair<int, int>, EdgeId> rep;
  for (EdgeId e = 0; e < g.num_edges(); ++e) rep.emplace(std::minmax(g.edge(e).u, g.edge(e).v), e);
  EdgeSet reps;
  for (const auto& [key, e] : rep) reps.push_back(e);
  std::sort(reps.begin(), reps.end());
  const auto simple = edge_subgraph(g, reps);
  Basis out;
  for (const auto& m : enumerate_perfect_matchings(simple.graph, 16))
    out.matchings.push_back(pull_back(m, simple.edge_map));
  if (out.matchings.size() != 6) throw InvariantViolation("Petersen graph without six perfect matchings");
  out.provenance = {"petersen", "six perfect matchings", {}};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const EdgeId r = rep.at(std::minmax(g.edge(e).u, g.edge(e).v));
    if (r == e) continue;
    std::size_t i = 0;
    while (!contains(out.matchings[i].edges, r)) ++i;
    Matching m = out.matchings[i];
    std::replace(m.edges.begin(), m.edges.end(), r, e);
    std::sort(m.edges.begin(), m.edges.end());
    out.matchings.push_back(std::move(m));
    out.provenance.children.push_back(
        {"replicate", "edge " + std::to_string(e) + " copies " + std::to_string(r) + " in element " + std::to_string(i), {}});
  }
  return out;
}

Basis lift(const Basis& b, const std::vector<EdgeId>& edge_map) {
  Basis out;
  out.provenance = b.provenance;
  for (const auto& m : b.matchings) out.matchings.push_back(pull_back(m, edge_map));
  return out;
}

Basis compose(const MultiGraph& g, const Cut& c, const Basis& shore_shrunk, const Basis& complement_shrunk) {
  const auto& xs = shore_shrunk.matchings;
  const auto& ys = complement_shrunk.matchings;
  auto crossing = [&](const std::vector<Matching>& side, const char* name) {
    std::vector<EdgeId> at(side.size());
    for (std::size_t i = 0; i < side.size(); ++i) {
      EdgeSet hit;
      std::set_intersection(side[i].edges.begin(), side[i].edges.end(), c.edges.begin(), c.edges.end(),
                            std::back_inserter(hit));
      if (hit.size() != 1)
        throw InvalidArgument(std::string(name) + " element " + std::to_string(i) + " crosses the cut " +
                              std::to_string(hit.size()) + " times");
      at[i] = hit.front();
    }
    return at;
  };
  const auto x_at = crossing(xs, "first basis");
  const auto y_at = crossing(ys, "second basis");
  Basis out;
  for (EdgeId e : c.edges) {
    std::vector<std::size_t> is, js;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (x_at[i] == e) is.push_back(i);
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (y_at[j] == e) js.push_back(j);
    if (is.empty() || js.empty())
      throw InvalidArgument("cut edge " + std::to_string(e) + " is missing from one of the bases");
    for (std::size_t j : js) out.matchings.push_back(merge(xs[is.front()], ys[j]));
    for (std::size_t t = 1; t < is.size(); ++t) out.matchings.push_back(merge(xs[is[t]], ys[js.front()]));
  }
  for (const auto& m : out.matchings)
    if (!is_perfect_matching(g, m)) throw InvariantViolation("composition produced a non-matching " + to_string(m));
  if (out.matchings.size() + c.edges.size() != xs.size() + ys.size())
    throw InvariantViolation("composition size differs from |b1| + |b2| - |C|");
  out.provenance = {"compose", "cut " + to_string(c.shore), {shore_shrunk.provenance, complement_shrunk.provenance}};
  return out;
}

Basis brick_basis(const MultiGraph& g) {
  if (is_petersen_graph(g)) return petersen_basis(g);
  auto out = run_bvn(g);
  if (auto* b = std::get_if<BvnBasis>(&out)) return {b->matchings, {"bvn-run", "brick " + shape(g), {}}};
  if (auto* s = std::get_if<BvnStuck>(&out))
    throw UnsupportedInstance("run_bvn stuck on a brick (" + shape(g) + "): " + s->reason);
  const auto& cert = std::get<FractionalCertificate>(out);
  const RobustCut rc = robust_cut(g, cert);
  Basis a = lift(lattice_basis(rc.shore_shrunk.graph), rc.shore_shrunk.edge_map);
  Basis b = lift(lattice_basis(rc.complement_shrunk.graph), rc.complement_shrunk.edge_map);
  Basis composed = compose(g, rc.cut, a, b);
  composed.matchings.push_back(rc.triple_matching);
  // The integrality argument reads coefficients off 1^T z = n/2 and 1_C^T z in {1, 3}.
  int threes = 0;
  for (const auto& m : composed.matchings) {
    if (static_cast<int>(m.edges.size()) * 2 != g.num_vertices())
      throw InvariantViolation("augmented basis element of the wrong size");
    const int k = intersection_size(m.edges, rc.cut.edges);
    if (k != 1 && k != 3) throw InvariantViolation("augmented basis element crosses the cut " + std::to_string(k) + " times");
    threes += k == 3 ? 1 : 0;
  }
  if (threes != 1) throw InvariantViolation("augmented basis needs exactly one three-crossing element");
  Basis res{std::move(composed.matchings),
            {"triple-augment", "cut " + to_string(rc.cut.shore) + " with " + to_string(rc.triple_matching),
             {composed.provenance}}};
  check_size(res, lattice_dimension(g), "brick " + shape(g));
  return res;
}

Basis lattice_basis(const MultiGraph& g) {
  if (!find_perfect_matching(g)) throw InvalidArgument("graph has no perfect matching");
  const auto core = matching_covered_core(g);
  std::vector<Basis> parts;
  for (const auto& comp : component_graphs(core.graph)) parts.push_back(lift(covered_basis(comp.graph), comp.edge_map));
  Basis b = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) b = product(b, parts[i]);
  b = lift(b, core.edge_map);
  if (core.graph.num_edges() != g.num_edges())
    b.provenance = {"core", std::to_string(g.num_edges() - core.graph.num_edges()) + " uncovered edges dropped",
                    {b.provenance}};
  for (const auto& m : b.matchings)
    if (!is_perfect_matching(g, m)) throw InvariantViolation("basis element is not a perfect matching");
  check_size(b, lattice_dimension(core.graph), "lattice basis");
  return b;
}

}  // namespace pml
