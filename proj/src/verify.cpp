#include "pml/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <random>
#include <set>

#include "pml/lattice.hpp"
#include "pml/matching.hpp"
#include "pml/tightcut.hpp"

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

std::string render(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

std::vector<IntVector> rows_of(const MultiGraph& g, const std::vector<Matching>& ms) {
  std::vector<IntVector> rows;
  rows.reserve(ms.size());
  for (const auto& m : ms) rows.push_back(to_int_vector(incidence_vector(g, m)));
  return rows;
}

// Perfect matchings, or nullopt with the report marked when the cap is exceeded.
std::optional<std::vector<Matching>> enumerate(const MultiGraph& g, std::size_t cap, VerificationReport& r) {
  try {
    return enumerate_perfect_matchings(g, cap);
  } catch (const EnumerationOverflow& e) {
    r.overflow = true;
    r.overflow_note = "more than " + std::to_string(e.cap()) + " perfect matchings";
    return std::nullopt;
  }
}

bool has_petersen_brick(const MultiGraph& g) {
  const auto core = matching_covered_core(g);
  for (const auto& comp : component_graphs(core.graph)) {
    const auto tree = tight_cut_decomposition(comp.graph);
    for (int leaf : tree.leaves()) {
      const auto& nd = tree.nodes[ix(leaf)];
      if (nd.kind == LeafKind::Brick && is_petersen_graph(nd.graph)) return true;
    }
  }
  return false;
}

bool is_simple_four_cycle(const MultiGraph& g) {
  if (g.num_vertices() != 4 || g.num_edges() != 4) return false;
  std::set<std::pair<int, int>> distinct;
  for (const Edge& e : g.edges()) distinct.insert(std::minmax(e.u, e.v));
  return distinct.size() == 4 && is_connected(g) && g.degree(0) == 2 && g.degree(1) == 2 && g.degree(2) == 2 &&
         g.degree(3) == 2;
}

bool is_brick(const MultiGraph& g) {
  return is_matching_covered(g).matching_covered && !is_bipartite(g) && !find_nontrivial_tight_cut(g);
}

// Oracle: every edge lies in a matching crossing c once, and those matchings span one
// dimension less than all of them.
struct CutFace {
  bool separating = false;
  int rank = 0;
};

CutFace cut_face(const MultiGraph& g, const std::vector<Matching>& all, const Cut& c) {
  std::vector<Matching> once;
  for (const auto& m : all)
    if (intersection_size(m.edges, c.edges) == 1) once.push_back(m);
  std::vector<char> seen(ix(g.num_edges()), 0);
  for (const auto& m : once)
    for (EdgeId e : m.edges) seen[ix(e)] = 1;
  return {std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }), rational_rank(rows_of(g, once))};
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string witness) {
  checks.push_back({std::move(name), pass, std::move(witness)});
}

void VerificationReport::absorb(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  if (other.overflow && !overflow) {
    overflow = true;
    overflow_note = other.overflow_note;
  }
}

GraphSummary summarize(const MultiGraph& g) {
  GraphSummary s{g.num_vertices(), g.num_edges(), 0, 0, 0};
  const auto core = matching_covered_core(g);
  s.bricks = brick_count(core.graph);
  s.polytope_dim = polytope_dimension(core.graph);
  s.lattice_dim = lattice_dimension(core.graph);
  return s;
}

VerificationReport check_basis(const MultiGraph& g, const std::vector<Matching>& basis, std::size_t cap) {
  VerificationReport r;
  r.summary = summarize(g);
  std::string bad;
  for (std::size_t i = 0; i < basis.size() && bad.empty(); ++i)
    if (!is_perfect_matching(g, basis[i])) bad = "element " + std::to_string(i) + " " + to_string(basis[i]);
  r.add("elements are perfect matchings", bad.empty(), bad);

  const auto rows = rows_of(g, basis);
  const int rank = rational_rank(rows);
  std::string dependent;
  if (rank != static_cast<int>(rows.size())) {
    // First element in the span of the earlier ones.
    for (std::size_t k = 1; k <= rows.size(); ++k) {
      const std::vector<IntVector> prefix(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(k));
      if (rational_rank(prefix) < static_cast<int>(k)) {
        dependent = "element " + std::to_string(k - 1) + " " + to_string(basis[k - 1]) +
                    " lies in the span of the elements before it";
        break;
      }
    }
  }
  r.add("rank equals size", dependent.empty(), dependent);
  const int size = static_cast<int>(basis.size());
  r.add("size equals lattice dimension", size == r.summary.lattice_dim,
        size == r.summary.lattice_dim
            ? ""
            : "size " + std::to_string(size) + ", lattice dimension " + std::to_string(r.summary.lattice_dim));

  const auto all = enumerate(g, cap, r);
  if (!all) return r;
  const auto all_rows = rows_of(g, *all);
  const IntMatrix basis_hnf = lattice_hnf(rows, g.num_edges());
  std::string outside;
  for (std::size_t i = 0; i < all->size() && outside.empty(); ++i)
    if (!lattice_contains(basis_hnf, all_rows[i])) outside = "perfect matching " + to_string((*all)[i]);
  const bool equal = lattice_equal(rows, all_rows, g.num_edges());
  r.add("lattice equals the perfect matching lattice", equal,
        equal ? "" : (outside.empty() ? "basis spans vectors outside the perfect matching lattice" : outside));
  r.add("every perfect matching is an integral combination", outside.empty(), outside);
  return r;
}

VerificationReport check_lovasz_doubling(const MultiGraph& g, int trials, std::uint64_t seed, std::size_t cap) {
  VerificationReport r;
  r.summary = summarize(g);
  const auto all = enumerate(g, cap, r);
  if (!all) return r;
  const int m = g.num_edges();
  const auto rows = rows_of(g, *all);
  const IntMatrix lattice = lattice_hnf(rows, m);
  const IntMatrix hull = saturation(rows, m);

  // The saturation rows themselves, then random combinations of them.
  std::vector<IntVector> points(hull.begin(), hull.end());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int t = 0; t < trials; ++t) {
    IntVector x(ix(m), 0);
    for (const auto& h : hull) {
      const int c = coeff(rng);
      if (c == 0) continue;
      for (int e = 0; e < m; ++e) x[ix(e)] += c * h[ix(e)];
    }
    points.push_back(std::move(x));
  }

  std::string double_outside, outside;
  for (const auto& x : points) {
    IntVector twice(x);
    for (auto& v : twice) v *= 2;
    if (double_outside.empty() && !lattice_contains(lattice, twice)) double_outside = "x = " + render(x);
    if (outside.empty() && !lattice_contains(lattice, x)) outside = "x = " + render(x);
  }
  const std::string sampled = std::to_string(points.size()) + " sampled points";
  r.add("doubled hull points lie in the lattice", double_outside.empty(), double_outside);
  if (has_petersen_brick(g))
    r.add("a hull point outside the lattice exists", !outside.empty(), outside.empty() ? "none among " + sampled : outside);
  else
    r.add("hull points lie in the lattice", outside.empty(), outside);
  return r;
}

VerificationReport check_facet_characterizations(const MultiGraph& g, std::size_t cap, std::uint64_t seed) {
  if (!is_matching_covered(g).matching_covered) throw InvalidArgument("facet characterizations need a matching covered graph");
  VerificationReport r;
  r.summary = summarize(g);
  const auto all = enumerate(g, cap, r);
  if (!all) return r;
  const int m = g.num_edges();
  const int full = rational_rank(rows_of(g, *all));

  auto edge_facet = [&](EdgeId e) {
    std::vector<Matching> avoiding;
    for (const auto& mt : *all)
      if (!contains(mt.edges, e)) avoiding.push_back(mt);
    return !avoiding.empty() && rational_rank(rows_of(g, avoiding)) == full - 1;
  };
  auto minus = [&](EdgeSet drop) {
    std::sort(drop.begin(), drop.end());
    return delete_edges(g, drop).graph;
  };

    // The bipartite statement needs a brace: C6 - e is a path, yet x_e >= 0 is a facet of the segment PM(C6).
  if (is_bipartite(g) && !is_simple_four_cycle(g) && !find_nontrivial_tight_cut(g)) {
    std::string diff;
    for (EdgeId e = 0; e < m && diff.empty(); ++e) {
      const bool oracle = edge_facet(e);
      const bool combinatorial = is_matching_covered(minus({e})).matching_covered;
      if (oracle != combinatorial)
        diff = "edge " + std::to_string(e) + ": oracle " + (oracle ? "facet" : "not facet") +
               ", G - e " + (combinatorial ? "matching covered" : "not matching covered");
    }
    r.add("brace edge facets match G - e matching covered", diff.empty(), diff);
  } else if (g.num_vertices() <= 16 && is_brick(g) && is_bvn_by_odd_cycles(g)) {
    std::string diff;
    for (EdgeId e = 0; e < m && diff.empty(); ++e) {
      const bool oracle = edge_facet(e);
      const MultiGraph h = minus({e});
      const bool near_brick = is_matching_covered(h).matching_covered && brick_count(h) == 1;
      int partners = 0;
      for (EdgeId f = 0; f < m; ++f) {
        if (f == e || !is_bipartite(minus({e, f}))) continue;
        const bool tied = std::all_of(all->begin(), all->end(), [&](const Matching& mt) {
          return contains(mt.edges, e) == contains(mt.edges, f);
        });
        partners += tied ? 1 : 0;
      }
      const bool combinatorial = near_brick || partners == 1;
      if (oracle != combinatorial)
        diff = "edge " + std::to_string(e) + ": oracle " + (oracle ? "facet" : "not facet") + ", G - e near-brick " +
               (near_brick ? "yes" : "no") + ", tied bipartizing partners " + std::to_string(partners);
    }
    r.add("BvN brick edge facets match the near-brick or partner condition", diff.empty(), diff);
  }

  if (r.summary.bricks == 1) {
    std::string diff;
    const auto cuts = sample_odd_cuts(g, 64, 32, seed);
    for (const auto& c : cuts) {
      const CutFace f = cut_face(g, *all, c);
      const bool oracle = f.separating && f.rank == full - 1;
      bool combinatorial = true;
      for (const VertexSet& side : {c.shore, complement(g, c.shore)}) {
        const MultiGraph h = contract(g, side).graph;
        combinatorial = combinatorial && is_matching_covered(h).matching_covered && brick_count(h) == 1;
      }
      if (oracle != combinatorial) {
        diff = "cut " + to_string(c.shore) + ": oracle " + (oracle ? "facet" : "not facet") + ", contractions " +
               (combinatorial ? "" : "not ") + "matching covered near-bricks";
        break;
      }
    }
    r.add("odd cut facets match near-brick contractions (" + std::to_string(cuts.size()) + " cuts)", diff.empty(), diff);
  }
  return r;
}

VerificationReport check_dim_formula_consistency(const MultiGraph& g, std::size_t cap, std::uint64_t seed) {
  VerificationReport r;
  r.summary = summarize(g);
  const auto all = enumerate(g, cap, r);
  if (!all) return r;
  const int rank = rational_rank(rows_of(g, *all));
  auto mismatch = [](int oracle, int formula) {
    return oracle == formula ? std::string() : "oracle " + std::to_string(oracle) + ", formula " + std::to_string(formula);
  };
  r.add("polytope dimension matches the formula", rank - 1 == r.summary.polytope_dim,
        mismatch(rank - 1, r.summary.polytope_dim));
  r.add("lattice dimension matches the formula", rank == r.summary.lattice_dim, mismatch(rank, r.summary.lattice_dim));

  std::string diff;
  int separating = 0;
  for (const auto& c : sample_odd_cuts(g, 64, 32, seed)) {
    const CutFace f = cut_face(g, *all, c);
    if (!f.separating) continue;
    ++separating;
    const int formula = polytope_dimension(contract(g, c.shore).graph) +
                        polytope_dimension(contract(g, complement(g, c.shore)).graph) + 1 -
                        static_cast<int>(c.edges.size());
    if (f.rank - 1 != formula) {
      diff = "cut " + to_string(c.shore) + ": " + mismatch(f.rank - 1, formula);
      break;
    }
  }
  r.add("separating cut face dimensions (" + std::to_string(separating) + " cuts)", diff.empty(), diff);
  return r;
}

bool is_bvn_by_odd_cycles(const MultiGraph& g) {
  const int n = g.num_vertices();
  if (n > 16) throw InvalidArgument("odd cycle oracle is limited to 16 vertices");
  if (n == 0) return true;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> adj(ix(n), 0);
  for (const Edge& e : g.edges()) {
    adj[ix(e.u)] |= 1u << e.v;
    adj[ix(e.v)] |= 1u << e.u;
  }
  // ends[S]: vertices where a path from the lowest vertex of S through all of S can end.
  std::vector<std::uint32_t> ends(ix(static_cast<int>(full) + 1), 0);
  for (int s = 0; s < n; ++s) ends[1u << s] = 1u << s;
  std::vector<char> cycle(ends.size(), 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!ends[mask]) continue;
    const int s = std::countr_zero(mask);
    const int size = std::popcount(mask);
    if (size >= 3 && size % 2 == 1 && (ends[mask] & adj[ix(s)])) cycle[mask] = 1;
    for (std::uint32_t rest = ends[mask]; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      // Extend only by vertices above the start so each cycle is built from its lowest vertex.
      std::uint32_t next = adj[ix(v)] & ~mask & ~((2u << s) - 1);
      for (; next; next &= next - 1) {
        const int u = std::countr_zero(next);
        ends[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  // cover[S]: S splits into single edges and odd cycles.
  std::vector<char> cover(ends.size(), 0);
  cover[0] = 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t low = 1u << v;
    bool ok = false;
    for (std::uint32_t nb = adj[ix(v)] & mask; nb && !ok; nb &= nb - 1) ok = cover[mask & ~low & ~(nb & (~nb + 1))];
    for (std::uint32_t sub = (mask & ~low); !ok; sub = (sub - 1) & (mask & ~low)) {
      if (cycle[sub | low] && cover[mask & ~(sub | low)]) ok = true;
      if (sub == 0) break;
    }
    cover[mask] = ok;
  }
  for (std::uint32_t s = 1; s <= full; ++s)
    if (cycle[s] && cover[full & ~s]) return false;
  return true;
}

std::vector<Cut> sample_odd_cuts(const MultiGraph& g, std::size_t all_limit, std::size_t samples, std::uint64_t seed) {
  const int n = g.num_vertices();
  if (n < 2 || n % 2 != 0) return {};
  if (n > 62) throw InvalidArgument("cut sampling is limited to 62 vertices");
  auto to_cut = [&](std::uint64_t mask) {
    VertexSet shore;
    for (int v = 1; v < n; ++v)
      if (mask >> (v - 1) & 1) shore.push_back(v);
    return make_cut(g, shore);
  };
  const int free = n - 1;
  const double count = std::ldexp(1.0, free - 1);  // odd subsets of the other n - 1 vertices
  std::vector<Cut> out;
  if (count <= static_cast<double>(all_limit)) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free); ++mask)
      if (std::popcount(mask) % 2 == 1) out.push_back(to_cut(mask));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> seen;
  const std::uint64_t limit = free == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << free) - 1;
  while (seen.size() < samples) {
    const std::uint64_t mask = rng() & limit;
    if (std::popcount(mask) % 2 == 1 && seen.insert(mask).second) out.push_back(to_cut(mask));
  }
  return out;
}

}  // namespace pml
