#include "pml/cutsearch.hpp"

#include <algorithm>
#include <set>

#include "pml/matching.hpp"
#include "pml/tightcut.hpp"

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

std::string shore_list(const std::vector<Cut>& h) {
  std::string s;
  for (const auto& c : h) s += " " + to_string(c.shore);
  return s;
}

// Vertices of g that the contraction sends into `part`.
VertexSet lift(const ContractionResult& cr, const VertexSet& part) {
  std::vector<char> in(ix(cr.graph.num_vertices()), 0);
  for (VertexId v : part) in[ix(v)] = 1;
  VertexSet out;
  for (VertexId v = 0; v < static_cast<int>(cr.vertex_map.size()); ++v)
    if (in[ix(cr.vertex_map[ix(v)])]) out.push_back(v);
  return out;
}

VertexSet unite(VertexSet a, const VertexSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<VertexSet> components_without(const MultiGraph& h, const VertexSet& b) {
  std::vector<char> removed(ix(h.num_vertices()), 0);
  for (VertexId v : b) removed[ix(v)] = 1;
  return connected_components(h, removed);
}

bool has_pm_on(const MultiGraph& h, const VertexSet& part) {
  std::vector<char> removed(ix(h.num_vertices()), 1);
  for (VertexId v : part) removed[ix(v)] = 0;
  return find_perfect_matching(h, removed).has_value();
}

// Grows a barrier of a graph with a perfect matching until G - B has no even component
// and every odd component is factor critical, which makes it inclusion-maximal.
VertexSet grow_barrier(const MultiGraph& h, VertexSet b) {
  for (;;) {
    bool grew = false;
    for (const auto& k : components_without(h, b)) {
      if (k.size() % 2 == 0) {
        b = unite(b, {k.front()});
        grew = true;
        break;
      }
      if (k.size() == 1) continue;
      for (VertexId w : k) {
        VertexSet rest;
        for (VertexId t : k)
          if (t != w) rest.push_back(t);
        if (has_pm_on(h, rest)) continue;
        std::vector<char> removed(ix(h.num_vertices()), 1);
        for (VertexId t : rest) removed[ix(t)] = 0;
        b = unite(b, unite(gallai_edmonds_a_set(h, removed), {w}));
        grew = true;
        break;
      }
      if (grew) break;
    }
    if (!grew) return b;
  }
}

int odd_component_count(const MultiGraph& h, const VertexSet& b) {
  int odd = 0;
  for (const auto& k : components_without(h, b)) odd += static_cast<int>(k.size() % 2);
  return odd;
}

// Orders candidate cuts: x(F) < 1 first when x is known, then small shores.
struct Ranked {
  Cut cut;
  bool below_one = true;
  int defect = 0;
};

bool shore_less(const Cut& a, const Cut& b) {
  if (a.shore.size() != b.shore.size()) return a.shore.size() < b.shore.size();
  return a.shore < b.shore;
}

bool has_petersen_brick(const MultiGraph& h) {
  if (!is_matching_covered(h).matching_covered) return false;
  const auto tree = tight_cut_decomposition(h);
  for (int leaf : tree.leaves()) {
    const auto& node = tree.nodes[ix(leaf)];
    if (node.kind == LeafKind::Brick && is_petersen_graph(node.graph)) return true;
  }
  return false;
}

// Calls f on each 3-subset of c with pairwise disjoint edges, ascending, until f
// returns true.
template <class F>
bool for_each_triple_subset(const MultiGraph& g, const Cut& c, F&& f) {
  const auto& ce = c.edges;
  const std::size_t k = ce.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      for (std::size_t d = b + 1; d < k; ++d) {
        const Edge& ea = g.edge(ce[a]);
        const Edge& eb = g.edge(ce[b]);
        const Edge& ed = g.edge(ce[d]);
        const std::set<VertexId> ends{ea.u, ea.v, eb.u, eb.v, ed.u, ed.v};
        if (ends.size() != 6) continue;
        if (f(EdgeSet{ce[a], ce[b], ce[d]})) return true;
      }
  return false;
}

// A perfect matching meeting c in exactly three edges and f in exactly one.
std::optional<Matching> triple_witness(const MultiGraph& g, const Cut& c, const Cut& f) {
  std::optional<Matching> out;
  for_each_triple_subset(g, c, [&](const EdgeSet& t) {
    for (EdgeId e : f.edges) {
      EdgeSet include = t;
      if (!contains(t, e)) {
        const Edge& ee = g.edge(e);
        bool clash = false;
        for (EdgeId s : t) {
          const Edge& es = g.edge(s);
          clash = clash || es.u == ee.u || es.u == ee.v || es.v == ee.u || es.v == ee.v;
        }
        if (clash || contains(c.edges, e)) continue;
        include.push_back(e);
        std::sort(include.begin(), include.end());
      }
      EdgeSet exclude;
      for (EdgeId d : c.edges)
        if (!contains(t, d)) exclude.push_back(d);
      bool conflict = false;
      for (EdgeId d : f.edges) {
        if (d == e) continue;
        if (contains(t, d)) conflict = true;
        exclude.push_back(d);
      }
      if (conflict) continue;
      std::sort(exclude.begin(), exclude.end());
      exclude.erase(std::unique(exclude.begin(), exclude.end()), exclude.end());
      if ((out = perfect_matching_with(g, include, exclude))) return true;
    }
    return false;
  });
  return out;
}

// Candidate replacement cuts on the contraction h = g / shore (u = shrunk shore): the odd
// components of G' - B for u's barrier class, and both sides of every 2-separation
// through u. Each satisfies |M ∩ C| - 1 = sum (|M ∩ F| - 1) over its family.
struct Candidate {
  Cut cut;
  VertexSet far_side;  // vertices of g away from the shrunk shore
};

std::vector<Candidate> refinement_candidates(const MultiGraph& g, const ContractionResult& cr) {
  const MultiGraph& h = cr.graph;
  const VertexId u = cr.contracted;
  std::vector<Candidate> out;
  for (const auto& cls : maximal_barriers(h)) {
    if (cls.size() < 2 || !contains(cls, u)) continue;
    for (const auto& k : barrier_with_components(h, cls).odd_components)
      if (k.size() >= 3) {
        const VertexSet side = lift(cr, k);
        out.push_back({make_cut(g, side), side});
      }
  }
  for (const auto& sep : two_separations(h)) {
    if (sep.u != u && sep.v != u) continue;
    const VertexId v = sep.u == u ? sep.v : sep.u;
    const VertexSet& k1 = sep.first_even_component;
    VertexSet k2;
    for (VertexId t = 0; t < h.num_vertices(); ++t)
      if (t != u && t != v && !std::binary_search(k1.begin(), k1.end(), t)) k2.push_back(t);
    for (const VertexSet& other : {k2, k1}) {
      const VertexSet far = lift(cr, unite(other, {v}));
      out.push_back({make_cut(g, far), far});
    }
  }
  return out;
}

}  // namespace

CutSearchFailure::CutSearchFailure(const std::string& what, std::vector<Cut> history)
    : InvariantViolation(what + "; cut history:" + shore_list(history)), history_(std::move(history)) {}

Rational cut_value(const RationalVector& x, const Cut& c) {
  Rational s = 0;
  for (EdgeId e : c.edges) s += x[ix(e)];
  return s;
}

int separation_defect(const MultiGraph& g, const Cut& c) {
  const int n = g.num_vertices();
  std::vector<std::int64_t> w(ix(g.num_edges()), 0);
  for (EdgeId e : c.edges) w[ix(e)] = 1;
  int worst = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const std::int64_t keep = w[ix(e)];
    w[ix(e)] = keep - n;  // forces e in whenever some perfect matching uses it
    auto m = max_weight_perfect_matching(g, w, Sense::Min);
    w[ix(e)] = keep;
    if (!m || !contains(m->edges, e)) throw InvalidArgument("separation defect needs a matching covered graph");
    worst = std::max(worst, intersection_size(m->edges, c.edges));
  }
  return worst;
}

Cut initial_cut(const MultiGraph& g, const FractionalCertificate& cert) {
  if (cert.odd_cycles.empty()) throw InvalidArgument("certificate has no odd cycle");
  VertexSet shore = cert.odd_cycles.front();
  std::sort(shore.begin(), shore.end());
  Cut c = make_cut(g, shore);
  if (cut_value(cert.point, c) != 0) throw InvariantViolation("odd cycle cut carries weight");
  return c;
}

Cut make_separating(const MultiGraph& g, const Cut& c, const RationalVector* x, std::vector<Cut>* history) {
  if (!c.odd || c.trivial) throw InvalidArgument("make_separating needs a nontrivial odd cut");
  std::vector<Cut> local;
  std::vector<Cut>& hist = history ? *history : local;
  Cut cur = c;
  int defect = separation_defect(g, cur);
  const int limit = g.num_vertices() / 2;
  for (int iter = 0;; ++iter) {
    if (defect == 1) return cur;
    if (iter >= limit) throw CutSearchFailure("separating cut search exceeded its iteration bound", hist);
    std::optional<ContractionResult> side;
    for (const VertexSet& s : {cur.shore, complement(g, cur.shore)}) {
      auto cr = contract(g, s);
      if (!is_matching_covered(cr.graph).matching_covered) {
        side = std::move(cr);
        break;
      }
    }
    if (!side) throw CutSearchFailure("defect above one but both contractions matching covered", hist);
    const MultiGraph& h = side->graph;
    const VertexId u = side->contracted;
    VertexSet b;
    if (!find_perfect_matching(h)) {
      b = gallai_edmonds_a_set(h);
    } else {
      const Edge xy = h.edge(is_matching_covered(h).uncovered.front());
      std::vector<char> removed(ix(h.num_vertices()), 0);
      removed[ix(xy.u)] = removed[ix(xy.v)] = 1;
      b = grow_barrier(h, unite(gallai_edmonds_a_set(h, removed), {xy.u, xy.v}));
      if (odd_component_count(h, b) != static_cast<int>(b.size()))
        throw CutSearchFailure("grown set is not a barrier", hist);
    }
    if (!contains(b, u)) throw CutSearchFailure("barrier misses the contracted vertex", hist);
    std::vector<Ranked> ranked;
    for (const auto& k : components_without(h, b)) {
      if (k.size() % 2 == 0 || k.size() < 3) continue;
      Ranked r;
      r.cut = make_cut(g, lift(*side, k));
      r.below_one = !x || cut_value(*x, r.cut) < 1;
      r.defect = separation_defect(g, r.cut);
      ranked.push_back(std::move(r));
    }
    if (ranked.empty()) throw CutSearchFailure("every barrier component is trivial", hist);
    const auto best = std::min_element(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
      if (a.below_one != b.below_one) return a.below_one;
      if (a.defect != b.defect) return a.defect < b.defect;
      return shore_less(a.cut, b.cut);
    });
    if (best->defect >= defect) throw CutSearchFailure("barrier refinement did not lower the defect", hist);
    cur = best->cut;
    defect = best->defect;
    hist.push_back(cur);
  }
}

Cut make_facet_defining(const MultiGraph& g, const Cut& c, const RationalVector* x, std::vector<Cut>* history) {
  std::vector<Cut> local;
  std::vector<Cut>& hist = history ? *history : local;
  Cut cur = c;
  for (int step = 0;; ++step) {
    if (!is_separating_cut(g, cur)) throw CutSearchFailure("facet search needs a separating cut", hist);
    std::optional<ContractionResult> side;
    for (const VertexSet& s : {cur.shore, complement(g, cur.shore)}) {
      auto cr = contract(g, s);
      if (brick_count(cr.graph) != 1) {
        side = std::move(cr);
        break;
      }
    }
    if (!side) return cur;
    if (step >= g.num_edges()) throw CutSearchFailure("facet search exceeded |E| steps", hist);
    const auto cands = refinement_candidates(g, *side);
    if (cands.empty()) throw CutSearchFailure("many-brick contraction without barrier or 2-separation", hist);
    // A matching crossing C three times and F once witnesses a strictly larger face.
    std::optional<Cut> chosen;
    bool chosen_below = false;
    for (const auto& cand : cands) {
      if (cand.cut.trivial) continue;
      const bool below = !x || cut_value(*x, cand.cut) < 1;
      if (chosen && (chosen_below && !below)) continue;
      if (chosen && below == chosen_below && !shore_less(cand.cut, *chosen)) continue;
      if (!triple_witness(g, cur, cand.cut)) continue;
      chosen = cand.cut;
      chosen_below = below;
    }
    if (!chosen) throw CutSearchFailure("no candidate cut enlarges the face", hist);
    cur = *chosen;
    hist.push_back(cur);
    if (!is_separating_cut(g, cur)) cur = make_separating(g, cur, x, &hist);
  }
}

std::optional<Matching> matching_triple(const MultiGraph& g, const Cut& c) {
  std::optional<Matching> out;
  for_each_triple_subset(g, c, [&](const EdgeSet& t) {
    EdgeSet exclude;
    for (EdgeId e : c.edges)
      if (!contains(t, e)) exclude.push_back(e);
    out = perfect_matching_with(g, t, exclude);
    return out.has_value();
  });
  return out;
}

std::optional<VertexSet> petersen_side(const MultiGraph& g, const Cut& c) {
  for (const VertexSet& s : {c.shore, complement(g, c.shore)})
    if (has_petersen_brick(contract(g, s).graph)) return s;
  return std::nullopt;
}

Cut shift_off_petersen(const MultiGraph& g, const Cut& c, const RationalVector* x_point,
                       std::vector<Cut>* history) {
  std::vector<Cut> local;
  std::vector<Cut>& hist = history ? *history : local;
  auto found = petersen_side(g, c);
  if (!found) throw InvalidArgument("neither contraction has a Petersen brick");
  VertexSet x_side = *found;  // shrinking this side leaves the Petersen near-brick
  // Equivalent cuts until the Petersen side has no nontrivial tight cut.
  for (int step = 0;; ++step) {
    const auto cr = contract(g, x_side);
    if (is_petersen_graph(cr.graph)) break;
    if (step >= g.num_edges()) throw CutSearchFailure("Petersen side reduction exceeded |E| steps", hist);
    const int far_size = g.num_vertices() - static_cast<int>(x_side.size());
    bool moved = false;
    for (const auto& cand : refinement_candidates(g, cr)) {
      if (static_cast<int>(cand.far_side.size()) >= far_size) continue;
      const VertexSet rest = complement(g, cand.far_side);
      if (!has_petersen_brick(contract(g, rest).graph) || !is_separating_cut(g, cand.cut)) continue;
      x_side = rest;
      hist.push_back(cand.cut);
      moved = true;
      break;
    }
    if (!moved) throw CutSearchFailure("no equivalent cut shrinks the Petersen side", hist);
  }
  const auto cr = contract(g, x_side);
  const MultiGraph& p = cr.graph;
  std::vector<std::set<VertexId>> adj(ix(p.num_vertices()));
  for (const Edge& e : p.edges()) {
    adj[ix(e.u)].insert(e.v);
    adj[ix(e.v)].insert(e.u);
  }
  const VertexId x = cr.contracted;
  auto others = [&](VertexId a, VertexId skip) {
    std::vector<VertexId> out;
    for (VertexId t : adj[ix(a)])
      if (t != skip) out.push_back(t);
    return out;
  };
  const std::vector<VertexId> nx(adj[ix(x)].begin(), adj[ix(x)].end());
  // Outer cycle x, y, z, v, w and spokes x - x', y - y', w - w'. The six labellings are
  // tried in a fixed order (x' = largest neighbour first, z = smaller candidate first);
  // the first keeping x(C) < 1 wins, else the first one.
  std::optional<Cut> first;
  for (int xi = 2; xi >= 0; --xi) {
    const VertexId y = nx[xi == 0 ? 1 : 0], w = nx[xi == 2 ? 1 : 2];
    const auto ny = others(y, x), nw = others(w, x);
    for (int zi = 0; zi < 2; ++zi) {
      const VertexId z = ny[ix(zi)], yp = ny[ix(1 - zi)];
      const VertexId v = adj[ix(z)].count(nw[0]) ? nw[0] : nw[1];
      const VertexId wp = v == nw[0] ? nw[1] : nw[0];
      if (!adj[ix(z)].count(v) || adj[ix(z)].count(wp)) throw InvariantViolation("Petersen labelling failed");
      Cut out = make_cut(g, unite(x_side, lift(cr, {y, yp, w, wp})));
      if (!x_point || cut_value(*x_point, out) < 1) {
        hist.push_back(out);
        return out;
      }
      if (!first) first = std::move(out);
    }
  }
  hist.push_back(*first);
  return *first;
}

RobustCut robust_cut(const MultiGraph& g, const FractionalCertificate& cert) {
  if (is_petersen_graph(g)) throw InvalidArgument("the Petersen graph is a base case, not a cut search input");
  const RationalVector& x = cert.point;
  std::vector<Cut> hist;
  Cut c = initial_cut(g, cert);
  hist.push_back(c);
  c = make_separating(g, c, &x, &hist);
  c = make_facet_defining(g, c, &x, &hist);
  for (int round = 0; petersen_side(g, c); ++round) {
    if (round >= 4) throw CutSearchFailure("Petersen brick survives repeated shifts", hist);
    c = shift_off_petersen(g, c, &x, &hist);
    c = make_facet_defining(g, c, &x, &hist);
  }
  RobustCut rc;
  rc.cut = c;
  rc.shore_shrunk = contract(g, c.shore);
  rc.complement_shrunk = contract(g, complement(g, c.shore));
  rc.value = cut_value(x, c);
  auto m = matching_triple(g, c);
  if (!m) throw CutSearchFailure("separating cut without a three-crossing matching", hist);
  rc.triple_matching = std::move(*m);
  for (const auto* side : {&rc.shore_shrunk, &rc.complement_shrunk}) {
    if (!is_matching_covered(side->graph).matching_covered)
      throw CutSearchFailure("final contraction is not matching covered", hist);
    if (brick_count(side->graph) != 1) throw CutSearchFailure("final contraction is not a near-brick", hist);
  }
  if (rc.value >= 1)
    throw CutSearchFailure("final cut has certificate weight " + to_string(rc.value), hist);
  rc.history = std::move(hist);
  return rc;
}

}  // namespace pml
