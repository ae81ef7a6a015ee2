#include "pml/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "blossom.hpp"

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

// Smallest allowed edge id per vertex pair; key is (min, max).
std::map<std::pair<int, int>, EdgeId> representatives(const MultiGraph& g,
                                                      const std::vector<char>& vertex_removed,
                                                      const std::vector<char>& edge_forbidden) {
  std::map<std::pair<int, int>, EdgeId> rep;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!edge_forbidden.empty() && edge_forbidden[ix(e)]) continue;
    const Edge& ed = g.edge(e);
    if (!vertex_removed.empty() && (vertex_removed[ix(ed.u)] || vertex_removed[ix(ed.v)])) continue;
    rep.emplace(std::minmax(ed.u, ed.v), e);
  }
  return rep;
}

}  // namespace

EnumerationOverflow::EnumerationOverflow(std::size_t cap)
    : std::runtime_error("perfect matching enumeration exceeded cap of " + std::to_string(cap)),
      cap_(cap) {}

std::optional<Matching> find_perfect_matching(const MultiGraph& g,
                                              const std::vector<char>& vertex_removed,
                                              const std::vector<char>& edge_forbidden) {
  const int n = g.num_vertices();
  std::vector<char> active(ix(n), 1);
  int alive = n;
  if (!vertex_removed.empty()) {
    for (int v = 0; v < n; ++v) {
      if (vertex_removed[ix(v)]) {
        active[ix(v)] = 0;
        --alive;
      }
    }
  }
  if (alive % 2 != 0) return std::nullopt;
  if (alive == 0) return Matching{};
  const auto rep = representatives(g, vertex_removed, edge_forbidden);
  detail::CardinalityMatcher cm(n);
  // Insert in ascending edge-id order so the greedy start and BFS are deterministic
  // and prefer small ids.
  std::vector<std::pair<EdgeId, std::pair<int, int>>> order;
  for (const auto& [pair, e] : rep) order.push_back({e, pair});
  std::sort(order.begin(), order.end());
  for (const auto& [e, pair] : order) cm.add_edge(pair.first, pair.second);
  if (!cm.solve(active, true)) return std::nullopt;
  Matching m;
  const auto& mate = cm.mate();
  for (int v = 0; v < n; ++v) {
    if (active[ix(v)] && mate[ix(v)] > v) m.edges.push_back(rep.at({v, mate[ix(v)]}));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

int maximum_matching_size(const MultiGraph& g, const std::vector<char>& vertex_removed) {
  const int n = g.num_vertices();
  std::vector<char> active(ix(n), 1);
  for (int v = 0; v < n; ++v)
    if (!vertex_removed.empty() && vertex_removed[ix(v)]) active[ix(v)] = 0;
  detail::CardinalityMatcher cm(n);
  for (const auto& [pair, e] : representatives(g, vertex_removed, {})) cm.add_edge(pair.first, pair.second);
  cm.solve(active, false);
  int matched = 0;
  for (int v = 0; v < n; ++v) matched += active[ix(v)] && cm.mate()[ix(v)] >= 0 ? 1 : 0;
  return matched / 2;
}

VertexSet gallai_edmonds_a_set(const MultiGraph& g, const std::vector<char>& vertex_removed) {
  const int n = g.num_vertices();
  std::vector<char> removed = vertex_removed.empty() ? std::vector<char>(ix(n), 0) : vertex_removed;
  const int nu = maximum_matching_size(g, removed);
  std::vector<char> missable(ix(n), 0);
  for (int v = 0; v < n; ++v) {
    if (removed[ix(v)]) continue;
    removed[ix(v)] = 1;
    missable[ix(v)] = maximum_matching_size(g, removed) == nu;
    removed[ix(v)] = 0;
  }
  VertexSet a;
  for (int v = 0; v < n; ++v) {
    if (removed[ix(v)] || missable[ix(v)]) continue;
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other(e, v);
      if (!removed[ix(w)] && missable[ix(w)]) {
        a.push_back(v);
        break;
      }
    }
  }
  return a;
}

std::optional<Matching> max_weight_perfect_matching(const MultiGraph& g,
                                                    const std::vector<std::int64_t>& weights,
                                                    Sense sense) {
  const int n = g.num_vertices();
  if (static_cast<int>(weights.size()) != g.num_edges())
    throw InvalidArgument("weight vector length differs from edge count");
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return Matching{};
  // Orient so that larger is better, keep the best copy per vertex pair.
  std::map<std::pair<int, int>, EdgeId> best;
  auto score = [&](EdgeId e) { return sense == Sense::Max ? weights[ix(e)] : -weights[ix(e)]; };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto key = std::minmax(g.edge(e).u, g.edge(e).v);
    auto it = best.find(key);
    if (it == best.end() || score(e) > score(it->second)) best[key] = e;
  }
  if (best.empty()) return std::nullopt;
  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, e] : best) {
    lo = std::min(lo, score(e));
    hi = std::max(hi, score(e));
  }
  // shifted in [1, span]; a bonus exceeding (n/2) * span makes every maximum weight
  // matching a maximum cardinality one. Weights are doubled to keep duals integral.
  const std::int64_t span = hi - lo + 1;
  const std::int64_t bonus = static_cast<std::int64_t>(n / 2 + 1) * span;
  detail::WeightedMatcher wm(n);
  for (const auto& [key, e] : best) wm.set_edge(key.first, key.second, 2 * (score(e) - lo + 1 + bonus));
  const auto mate = wm.solve();
  Matching m;
  for (int v = 0; v < n; ++v) {
    if (mate[ix(v)] < 0) return std::nullopt;
    if (mate[ix(v)] > v) m.edges.push_back(best.at({v, mate[ix(v)]}));
  }
  std::sort(m.edges.begin(), m.edges.end());
  if (!is_perfect_matching(g, m)) throw InvariantViolation("weighted blossom returned a non-matching");
  return m;
}

std::optional<Matching> perfect_matching_with(const MultiGraph& g, const EdgeSet& include,
                                              const EdgeSet& exclude) {
  const int n = g.num_vertices();
  std::vector<char> removed(ix(n), 0);
  std::vector<char> forbidden(ix(g.num_edges()), 0);
  for (EdgeId e : exclude) {
    if (e < 0 || e >= g.num_edges()) throw InvalidArgument("excluded edge id out of range");
    forbidden[ix(e)] = 1;
  }
  for (EdgeId e : include) {
    if (e < 0 || e >= g.num_edges()) throw InvalidArgument("included edge id out of range");
    if (forbidden[ix(e)]) throw InvalidArgument("edge " + std::to_string(e) + " both included and excluded");
    const Edge& ed = g.edge(e);
    if (removed[ix(ed.u)] || removed[ix(ed.v)])
      throw InvalidArgument("included edges are not pairwise disjoint");
    removed[ix(ed.u)] = 1;
    removed[ix(ed.v)] = 1;
  }
  auto rest = find_perfect_matching(g, removed, forbidden);
  if (!rest) return std::nullopt;
  rest->edges.insert(rest->edges.end(), include.begin(), include.end());
  std::sort(rest->edges.begin(), rest->edges.end());
  return rest;
}

EdgeSet covered_edges(const MultiGraph& g) {
  std::vector<char> covered(ix(g.num_edges()), 0);
  auto first = find_perfect_matching(g);
  if (!first) return {};
  for (EdgeId e : first->edges) covered[ix(e)] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (covered[ix(e)]) continue;
    if (auto m = perfect_matching_with(g, {e}, {}))
      for (EdgeId f : m->edges) covered[ix(f)] = 1;
  }
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (covered[ix(e)]) out.push_back(e);
  return out;
}

CoverageReport is_matching_covered(const MultiGraph& g) {
  CoverageReport r;
  const EdgeSet cov = covered_edges(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (!contains(cov, e)) r.uncovered.push_back(e);
  const bool has_pm = !cov.empty();
  r.matching_covered = g.num_vertices() > 0 && has_pm && r.uncovered.empty() && is_connected(g);
  return r;
}

EdgeMappedGraph matching_covered_core(const MultiGraph& g) {
  const EdgeSet cov = covered_edges(g);
  if (cov.empty() && g.num_vertices() > 0) throw InvalidArgument("graph has no perfect matching");
  return edge_subgraph(g, cov);
}

namespace {
std::vector<std::int64_t> cut_weights(const MultiGraph& g, const Cut& c) {
  std::vector<std::int64_t> w(ix(g.num_edges()), 0);
  for (EdgeId e : c.edges) w[ix(e)] = 1;
  return w;
}
}  // namespace

int phi(const MultiGraph& g, const Cut& c) {
  auto m = max_weight_perfect_matching(g, cut_weights(g, c), Sense::Min);
  if (!m) throw InvalidArgument("phi requires a graph with a perfect matching");
  return intersection_size(m->edges, c.edges);
}

int max_crossing(const MultiGraph& g, const Cut& c) {
  auto m = max_weight_perfect_matching(g, cut_weights(g, c), Sense::Max);
  if (!m) throw InvalidArgument("crossing count requires a graph with a perfect matching");
  return intersection_size(m->edges, c.edges);
}

bool is_tight_cut(const MultiGraph& g, const Cut& c) { return max_crossing(g, c) == 1; }

bool is_separating_cut(const MultiGraph& g, const Cut& c) {
  if (c.shore.empty() || static_cast<int>(c.shore.size()) >= g.num_vertices()) return false;
  return is_matching_covered(contract(g, c.shore).graph).matching_covered &&
         is_matching_covered(contract(g, complement(g, c.shore)).graph).matching_covered;
}

std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g, std::size_t cap) {
  if (cap < 1) throw InvalidArgument("enumeration cap must be at least 1");
  const int n = g.num_vertices();
  std::vector<Matching> out;
  if (n % 2 != 0) return out;
  std::vector<char> used(ix(n), 0);
  EdgeSet current;
  auto rec = [&](auto&& self, int from) -> void {
    int v = from;
    while (v < n && used[ix(v)]) ++v;
    if (v == n) {
      if (out.size() >= cap) throw EnumerationOverflow(cap);
      Matching m{current};
      std::sort(m.edges.begin(), m.edges.end());
      out.push_back(std::move(m));
      return;
    }
    used[ix(v)] = 1;
    for (EdgeId e : g.incident(v)) {
      const VertexId w = g.other(e, v);
      if (used[ix(w)]) continue;
      used[ix(w)] = 1;
      current.push_back(e);
      self(self, v + 1);
      current.pop_back();
      used[ix(w)] = 0;
    }
    used[ix(v)] = 0;
  };
  rec(rec, 0);
  return out;
}

}  // namespace pml
