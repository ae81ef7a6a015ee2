#include "pml/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace pml {

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  incidence_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InvalidArgument("edge " + std::to_string(i) + " has an endpoint out of range");
    if (e.u == e.v) throw InvalidArgument("edge " + std::to_string(i) + " is a self-loop");
    incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<EdgeId>(i));
    incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<EdgeId>(i));
  }
}

bool is_perfect_matching(const MultiGraph& g, const Matching& m) {
  std::vector<int> cover(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.num_edges()) return false;
    ++cover[static_cast<std::size_t>(g.edge(e).u)];
    ++cover[static_cast<std::size_t>(g.edge(e).v)];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::vector<int> incidence_vector(const MultiGraph& g, const Matching& m) {
  std::vector<int> v(static_cast<std::size_t>(g.num_edges()), 0);
  for (EdgeId e : m.edges) v[static_cast<std::size_t>(e)] = 1;
  return v;
}

bool contains(const EdgeSet& s, EdgeId e) { return std::binary_search(s.begin(), s.end(), e); }

int intersection_size(const EdgeSet& a, const EdgeSet& b) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

VertexSet complement(const MultiGraph& g, const VertexSet& shore) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : shore) in[static_cast<std::size_t>(v)] = 1;
  VertexSet out;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

EdgeSet boundary(const MultiGraph& g, const VertexSet& shore) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v : shore) in[static_cast<std::size_t>(v)] = 1;
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[static_cast<std::size_t>(ed.u)] != in[static_cast<std::size_t>(ed.v)]) out.push_back(e);
  }
  return out;
}

Cut make_cut(const MultiGraph& g, VertexSet shore) {
  std::sort(shore.begin(), shore.end());
  shore.erase(std::unique(shore.begin(), shore.end()), shore.end());
  for (VertexId v : shore)
    if (v < 0 || v >= g.num_vertices()) throw InvalidArgument("cut shore vertex out of range");
  if (!shore.empty() && shore.front() == 0) shore = complement(g, shore);
  Cut c;
  c.edges = boundary(g, shore);
  const int k = static_cast<int>(shore.size());
  const int n = g.num_vertices();
  c.odd = (k % 2 == 1) && ((n - k) % 2 == 1);
  c.trivial = (k == 1) || (k == n - 1);
  c.shore = std::move(shore);
  return c;
}

ContractionResult contract(const MultiGraph& g, const VertexSet& shore) {
  const int n = g.num_vertices();
  if (shore.empty() || static_cast<int>(shore.size()) >= n)
    throw InvalidArgument("contraction shore must be a nonempty proper vertex subset");
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (VertexId v : shore) {
    if (v < 0 || v >= n) throw InvalidArgument("contraction shore vertex out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  ContractionResult r;
  r.vertex_map.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (!in[static_cast<std::size_t>(v)]) r.vertex_map[static_cast<std::size_t>(v)] = next++;
  r.contracted = next;
  for (VertexId v = 0; v < n; ++v)
    if (in[static_cast<std::size_t>(v)]) r.vertex_map[static_cast<std::size_t>(v)] = r.contracted;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (in[static_cast<std::size_t>(ed.u)] && in[static_cast<std::size_t>(ed.v)]) continue;
    edges.push_back({r.vertex_map[static_cast<std::size_t>(ed.u)],
                     r.vertex_map[static_cast<std::size_t>(ed.v)]});
    r.edge_map.push_back(e);
  }
  r.graph = MultiGraph(next + 1, std::move(edges));
  return r;
}

EdgeMappedGraph edge_subgraph(const MultiGraph& g, const EdgeSet& keep) {
  EdgeMappedGraph r;
  std::vector<Edge> edges;
  for (EdgeId e : keep) {
    edges.push_back(g.edge(e));
    r.edge_map.push_back(e);
  }
  r.graph = MultiGraph(g.num_vertices(), std::move(edges));
  return r;
}

EdgeMappedGraph delete_edges(const MultiGraph& g, const EdgeSet& drop) {
  EdgeSet keep;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!contains(drop, e)) keep.push_back(e);
  return edge_subgraph(g, keep);
}

ContractionResult induced_subgraph(const MultiGraph& g, const VertexSet& vertices) {
  ContractionResult r;
  r.vertex_map.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  for (VertexId v : vertices) r.vertex_map[static_cast<std::size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const int a = r.vertex_map[static_cast<std::size_t>(g.edge(e).u)];
    const int b = r.vertex_map[static_cast<std::size_t>(g.edge(e).v)];
    if (a < 0 || b < 0) continue;
    edges.push_back({a, b});
    r.edge_map.push_back(e);
  }
  r.graph = MultiGraph(next, std::move(edges));
  return r;
}

std::vector<VertexSet> connected_components(const MultiGraph& g, const std::vector<char>& removed) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  if (!removed.empty())
    for (int v = 0; v < n; ++v)
      if (removed[static_cast<std::size_t>(v)]) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexSet> comps;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (EdgeId e : g.incident(comp[i])) {
        const VertexId w = g.other(e, comp[i]);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const MultiGraph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (VertexId s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        const VertexId w = g.other(e, v);
        if (side[static_cast<std::size_t>(w)] < 0) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Matching pull_back(const Matching& m, const std::vector<EdgeId>& edge_map) {
  Matching out;
  out.edges.reserve(m.edges.size());
  for (EdgeId e : m.edges) out.edges.push_back(edge_map[static_cast<std::size_t>(e)]);
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string to_string(const Matching& m) { return to_string(VertexSet(m.edges)); }

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace pml
