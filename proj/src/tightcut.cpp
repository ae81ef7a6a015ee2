#include "pml/tightcut.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pml/matching.hpp"

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

bool pm_without(const MultiGraph& g, std::initializer_list<VertexId> drop) {
  std::vector<char> removed(ix(g.num_vertices()), 0);
  for (VertexId v : drop) removed[ix(v)] = 1;
  return find_perfect_matching(g, removed).has_value();
}

std::vector<char> side_of(const MultiGraph& g) {
  std::vector<char> side(ix(g.num_vertices()), -1);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (side[ix(s)] >= 0) continue;
    side[ix(s)] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other(e, v);
        if (side[ix(w)] < 0) {
          side[ix(w)] = static_cast<char>(1 - side[ix(v)]);
          stack.push_back(w);
        }
      }
    }
  }
  return side;
}

// Hall obstruction shores of a bipartite graph: for a1,a2 on one side and b1,b2 on the
// other with G - a1 - a2 - b1 - b2 unmatchable, S ∪ N(S) for the Hall violator S.
std::vector<VertexSet> hall_shores(const MultiGraph& g) {
  const int n = g.num_vertices();
  const auto side = side_of(g);
  std::vector<VertexId> a, b;
  for (VertexId v = 0; v < n; ++v) (side[ix(v)] == 0 ? a : b).push_back(v);
  std::vector<VertexSet> out;
  std::set<VertexSet> seen;
  std::vector<char> removed(ix(n), 0);
  for (std::size_t i1 = 0; i1 < a.size(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < a.size(); ++i2)
      for (std::size_t j1 = 0; j1 < b.size(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < b.size(); ++j2) {
          std::fill(removed.begin(), removed.end(), 0);
          removed[ix(a[i1])] = removed[ix(a[i2])] = removed[ix(b[j1])] = removed[ix(b[j2])] = 1;
          // Kuhn matching from the A side, then alternating search from a free A vertex.
          std::vector<int> mate(ix(n), -1);
          std::vector<char> vis(ix(n));
          auto try_kuhn = [&](auto&& self, VertexId v) -> bool {
            for (EdgeId e : g.incident(v)) {
              VertexId w = g.other(e, v);
              if (removed[ix(w)] || vis[ix(w)]) continue;
              vis[ix(w)] = 1;
              if (mate[ix(w)] < 0 || self(self, mate[ix(w)])) {
                mate[ix(w)] = v;
                mate[ix(v)] = w;
                return true;
              }
            }
            return false;
          };
          VertexId free_a = -1;
          for (VertexId v : a) {
            if (removed[ix(v)]) continue;
            std::fill(vis.begin(), vis.end(), 0);
            if (!try_kuhn(try_kuhn, v)) {
              free_a = v;
              break;
            }
          }
          if (free_a < 0) continue;
          std::vector<char> reach(ix(n), 0);
          std::vector<VertexId> queue{free_a};
          reach[ix(free_a)] = 1;
          for (std::size_t q = 0; q < queue.size(); ++q) {
            VertexId v = queue[q];
            for (EdgeId e : g.incident(v)) {
              VertexId w = g.other(e, v);
              if (removed[ix(w)] || reach[ix(w)]) continue;
              reach[ix(w)] = 1;
              if (mate[ix(w)] >= 0 && !reach[ix(mate[ix(w)])]) {
                reach[ix(mate[ix(w)])] = 1;
                queue.push_back(mate[ix(w)]);
              }
            }
          }
          VertexSet shore;
          std::vector<char> in(ix(n), 0);
          for (VertexId v : a)
            if (reach[ix(v)]) in[ix(v)] = 1;
          for (VertexId v : a)
            if (in[ix(v)])
              for (EdgeId e : g.incident(v)) in[ix(g.other(e, v))] = 1;
          for (VertexId v = 0; v < n; ++v)
            if (in[ix(v)]) shore.push_back(v);
          if (seen.insert(shore).second) out.push_back(shore);
        }
  return out;
}

}  // namespace

std::vector<TwoSeparation> two_separations(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<TwoSeparation> out;
  std::vector<char> removed(ix(n), 0);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      std::fill(removed.begin(), removed.end(), 0);
      removed[ix(u)] = removed[ix(v)] = 1;
      const auto comps = connected_components(g, removed);
      int even = 0;
      const VertexSet* first = nullptr;
      for (const auto& c : comps)
        if (c.size() % 2 == 0) {
          ++even;
          if (!first) first = &c;
        }
      if (even < 2) continue;
      TwoSeparation s;
      s.u = u;
      s.v = v;
      s.first_even_component = *first;
      VertexSet su = *first, sv = *first;
      su.push_back(u);
      sv.push_back(v);
      s.cut_u = make_cut(g, su);
      s.cut_v = make_cut(g, sv);
      out.push_back(std::move(s));
    }
  return out;
}

std::vector<VertexSet> maximal_barriers(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> cls(ix(n), -1);
  std::vector<VertexSet> out;
  for (VertexId x = 0; x < n; ++x) {
    if (cls[ix(x)] >= 0) continue;
    cls[ix(x)] = static_cast<int>(out.size());
    VertexSet c{x};
    for (VertexId y = x + 1; y < n; ++y)
      if (cls[ix(y)] < 0 && !pm_without(g, {x, y})) {
        cls[ix(y)] = cls[ix(x)];
        c.push_back(y);
      }
    out.push_back(std::move(c));
  }
  return out;
}

Barrier barrier_with_components(const MultiGraph& g, const VertexSet& b) {
  Barrier out;
  out.vertices = b;
  std::vector<char> removed(ix(g.num_vertices()), 0);
  for (VertexId v : b) removed[ix(v)] = 1;
  for (auto& c : connected_components(g, removed))
    if (c.size() % 2 == 1) out.odd_components.push_back(std::move(c));
  return out;
}

std::optional<Cut> find_nontrivial_tight_cut(const MultiGraph& g, const CutSearchOptions& opt) {
  const int n = g.num_vertices();
  if (n < 6) return std::nullopt;
  std::vector<VertexSet> barrier_shores;
  for (const auto& cls : maximal_barriers(g)) {
    if (cls.size() < 2) continue;
    for (auto& k : barrier_with_components(g, cls).odd_components)
      if (k.size() >= 3) barrier_shores.push_back(std::move(k));
  }
  std::stable_sort(barrier_shores.begin(), barrier_shores.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  std::vector<Cut> candidates;
  for (const auto& s : barrier_shores) candidates.push_back(make_cut(g, s));
  // Without any nontrivial barrier (bicritical), 2-separations are the only source.
  const bool bipartite = is_bipartite(g);
  if (candidates.empty() || opt.shuffle_seed || bipartite) {
    for (const auto& s : two_separations(g)) {
      candidates.push_back(s.cut_u);
      candidates.push_back(s.cut_v);
    }
  }
  if ((candidates.empty() || opt.shuffle_seed) && bipartite)
    for (const auto& s : hall_shores(g)) candidates.push_back(make_cut(g, s));
  if (opt.shuffle_seed) {
    std::mt19937_64 rng(*opt.shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  for (const auto& c : candidates) {
    if (c.trivial || !c.odd) continue;
    if (!is_tight_cut(g, c)) throw InvariantViolation("candidate cut " + to_string(c.shore) + " is not tight");
    return c;
  }
  return std::nullopt;
}

std::vector<int> DecompositionTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].leaf) out.push_back(static_cast<int>(i));
  return out;
}

int DecompositionTree::brick_count() const {
  int b = 0;
  for (const auto& nd : nodes) b += nd.leaf && nd.kind == LeafKind::Brick;
  return b;
}

VertexSet DecompositionTree::root_shore(int node) const {
  const auto& nd = nodes[ix(node)];
  VertexSet out;
  for (VertexId v : nd.cut.shore) out.insert(out.end(), nd.preimage[ix(v)].begin(), nd.preimage[ix(v)].end());
  std::sort(out.begin(), out.end());
  return out;
}

int DecompositionTree::brace_count() const {
  int b = 0;
  for (const auto& nd : nodes) b += nd.leaf && nd.kind == LeafKind::Brace;
  return b;
}

DecompositionTree tight_cut_decomposition(const MultiGraph& g, const CutSearchOptions& opt) {
  const auto cov = is_matching_covered(g);
  if (!cov.matching_covered) throw InvalidArgument("tight cut decomposition needs a matching covered graph");
  DecompositionTree tree;
  DecompositionNode root;
  root.graph = g;
  root.edge_map_to_root.resize(ix(g.num_edges()));
  std::iota(root.edge_map_to_root.begin(), root.edge_map_to_root.end(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) root.preimage.push_back({v});
  tree.nodes.push_back(std::move(root));
  std::mt19937_64 rng(opt.shuffle_seed.value_or(0));
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    CutSearchOptions local;
    if (opt.shuffle_seed) local.shuffle_seed = rng();
    auto cut = find_nontrivial_tight_cut(tree.nodes[i].graph, local);
    if (!cut) {
      tree.nodes[i].leaf = true;
      tree.nodes[i].kind = is_bipartite(tree.nodes[i].graph) ? LeafKind::Brace : LeafKind::Brick;
      continue;
    }
    const MultiGraph parent_graph = tree.nodes[i].graph;
    const auto parent_map = tree.nodes[i].edge_map_to_root;
    const auto parent_pre = tree.nodes[i].preimage;
    tree.nodes[i].leaf = false;
    tree.nodes[i].cut = *cut;
    const VertexSet sides[2] = {cut->shore, complement(parent_graph, cut->shore)};
    for (int s = 0; s < 2; ++s) {
      auto r = contract(parent_graph, sides[s]);
      DecompositionNode child;
      child.graph = std::move(r.graph);
      child.edge_map_to_parent = r.edge_map;
      for (EdgeId e : r.edge_map) child.edge_map_to_root.push_back(parent_map[ix(e)]);
      child.parent = static_cast<int>(i);
      child.contracted = r.contracted;
      child.preimage.assign(ix(child.graph.num_vertices()), {});
      for (VertexId p = 0; p < parent_graph.num_vertices(); ++p) {
        auto& dst = child.preimage[ix(r.vertex_map[ix(p)])];
        dst.insert(dst.end(), parent_pre[ix(p)].begin(), parent_pre[ix(p)].end());
      }
      for (auto& pre : child.preimage) std::sort(pre.begin(), pre.end());
      tree.nodes[i].children[s] = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(std::move(child));
    }
  }
  return tree;
}

std::vector<ContractionResult> component_graphs(const MultiGraph& g) {
  std::vector<ContractionResult> out;
  for (const auto& c : connected_components(g)) out.push_back(induced_subgraph(g, c));
  return out;
}

namespace {
struct ComponentStats {
  int edges, vertices, bricks;
};
std::vector<ComponentStats> component_stats(const MultiGraph& g) {
  std::vector<ComponentStats> out;
  for (const auto& c : component_graphs(g)) {
    const auto tree = tight_cut_decomposition(c.graph);
    out.push_back({c.graph.num_edges(), c.graph.num_vertices(), tree.brick_count()});
  }
  return out;
}
}  // namespace

int brick_count(const MultiGraph& g) {
  int b = 0;
  for (const auto& s : component_stats(g)) b += s.bricks;
  return b;
}

int polytope_dimension(const MultiGraph& g) {
  int d = 0;
  for (const auto& s : component_stats(g)) d += s.edges - s.vertices + 1 - s.bricks;
  return d;
}

int lattice_dimension(const MultiGraph& g) { return polytope_dimension(g) + 1; }

bool is_petersen_graph(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n != 10) return false;
  std::vector<std::set<VertexId>> adj(ix(n));
  for (const Edge& e : g.edges()) {
    adj[ix(e.u)].insert(e.v);
    adj[ix(e.v)].insert(e.u);
  }
  for (const auto& a : adj)
    if (a.size() != 3) return false;
  // Girth 5: no triangle and no 4-cycle, i.e. adjacent vertices share no neighbour and
  // non-adjacent ones share at most one.
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      int common = 0;
      for (VertexId w : adj[ix(u)]) common += adj[ix(v)].count(w) ? 1 : 0;
      if (adj[ix(u)].count(v) ? common > 0 : common > 1) return false;
    }
  return true;
}

}  // namespace pml
