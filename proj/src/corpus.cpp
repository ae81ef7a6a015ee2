#include "pml/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "pml/matching.hpp"
#include "pml/named_graphs.hpp"

namespace pml::corpus {

namespace {

using Rows = std::vector<std::uint32_t>;

Rows adjacency_rows(const MultiGraph& g) {
  if (g.num_vertices() > 32) throw InvalidArgument("canonical code supports at most 32 vertices");
  Rows adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  return adj;
}

// Equitable refinement; colours are ranks of isomorphism-invariant signatures.
void refine(const Rows& adj, std::vector<int>& colour) {
  const int n = static_cast<int>(adj.size());
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[static_cast<std::size_t>(v)]};
      std::vector<int> nb;
      for (int w = 0; w < n; ++w)
        if (adj[static_cast<std::size_t>(v)] >> w & 1u) nb.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[static_cast<std::size_t>(v)] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (const auto& p : sig) keys.push_back(p.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      next[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(keys.begin(), keys.end(), sig[static_cast<std::size_t>(v)].first) - keys.begin());
    const int before = *std::max_element(colour.begin(), colour.end());
    const int after = *std::max_element(next.begin(), next.end());
    colour = std::move(next);
    if (after == before) return;
  }
}

void search(const Rows& adj, std::vector<int> colour, Rows& best, bool& have) {
  const int n = static_cast<int>(adj.size());
  refine(adj, colour);
  std::vector<int> size(static_cast<std::size_t>(n), 0);
  for (int c : colour) ++size[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (size[static_cast<std::size_t>(c)] > 1 &&
        (target < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(target)]))
      target = c;
  if (target < 0) {
    Rows code(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (adj[static_cast<std::size_t>(v)] >> w & 1u)
          code[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])] |=
              1u << colour[static_cast<std::size_t>(w)];
    if (!have || code < best) {
      best = code;
      have = true;
    }
    return;
  }
  std::vector<int> cell;
  for (int v = 0; v < n; ++v)
    if (colour[static_cast<std::size_t>(v)] == target) cell.push_back(v);
  std::vector<int> tried;
  for (int v : cell) {
    bool twin = false;
    for (int u : tried) {
      const std::uint32_t mask = ~((1u << u) | (1u << v));
      if ((adj[static_cast<std::size_t>(u)] & mask) == (adj[static_cast<std::size_t>(v)] & mask)) twin = true;
    }
    if (twin) continue;
    tried.push_back(v);
    std::vector<int> c = colour;
    for (auto& x : c)
      if (x >= target) x += 1;
    c[static_cast<std::size_t>(v)] = target;
    search(adj, c, best, have);
  }
}

MultiGraph from_rows(const Rows& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rows[static_cast<std::size_t>(u)] >> v & 1u) e.push_back({u, v});
  return MultiGraph(n, std::move(e));
}

std::string code_name(const Rows& code) {
  std::string s;
  for (std::size_t u = 0; u < code.size(); ++u)
    for (std::size_t v = u + 1; v < code.size(); ++v) s += (code[u] >> v & 1u) ? '1' : '0';
  return s;
}

}  // namespace

std::vector<std::uint32_t> canonical_code(const MultiGraph& g) {
  const Rows adj = adjacency_rows(g);
  Rows best;
  bool have = false;
  search(adj, std::vector<int>(adj.size(), 0), best, have);
  return best;
}

std::vector<MultiGraph> all_simple_graphs(int n) {
  std::set<Rows> level{canonical_code(MultiGraph(n))};
  std::vector<Rows> all(level.begin(), level.end());
  while (!level.empty()) {
    std::set<Rows> next;
    for (const Rows& r : level)
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (r[static_cast<std::size_t>(u)] >> v & 1u) continue;
          Rows s = r;
          s[static_cast<std::size_t>(u)] |= 1u << v;
          s[static_cast<std::size_t>(v)] |= 1u << u;
          next.insert(canonical_code(from_rows(s)));
        }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<MultiGraph> out;
  for (const Rows& r : all) out.push_back(from_rows(r));
  return out;
}

std::vector<NamedGraph> exhaustive_matching_covered(int max_n) {
  std::vector<NamedGraph> out;
  for (int n = 2; n <= max_n; n += 2)
    for (auto& g : all_simple_graphs(n))
      if (is_matching_covered(g).matching_covered)
        out.push_back({"n" + std::to_string(n) + "-" + code_name(adjacency_rows(g)), std::move(g)});
  return out;
}

namespace {

std::optional<MultiGraph> random_cubic(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> e;
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      auto p = std::minmax(points[i], points[i + 1]);
      if (p.first == p.second || !seen.insert(p).second) {
        ok = false;
        break;
      }
      e.push_back({p.first, p.second});
    }
    if (ok) return MultiGraph(n, std::move(e));
  }
  return std::nullopt;
}

std::optional<MultiGraph> random_bipartite_regular(std::mt19937_64& rng, int half, int k) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> e;
    bool ok = true;
    for (int r = 0; r < k && ok; ++r) {
      std::vector<int> perm(static_cast<std::size_t>(half));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int a = 0; a < half && ok; ++a) {
        const int b = half + perm[static_cast<std::size_t>(a)];
        if (!seen.insert({a, b}).second) ok = false;
        e.push_back({a, b});
      }
    }
    if (ok) return MultiGraph(2 * half, std::move(e));
  }
  return std::nullopt;
}

}  // namespace

std::vector<NamedGraph> random_matching_covered(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedGraph> out;
  std::set<Rows> seen;
  int kind = 0;
  for (int guard = 0; static_cast<int>(out.size()) < count && guard < 100 * count; ++guard, kind = (kind + 1) % 3) {
    const int n = 2 * std::uniform_int_distribution<int>(3, max_n / 2)(rng);
    std::optional<MultiGraph> g;
    std::string label;
    if (kind == 0) {
      g = random_cubic(rng, n);
      label = "cubic";
    } else if (kind == 1) {
      g = random_cubic(rng, n);
      label = "near-cubic";
      if (g) {
        std::vector<Edge> e(g->edges().begin(), g->edges().end());
        const int extra = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int t = 0; t < extra; ++t) {
          int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
          int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
          if (u == v) continue;
          const auto p = std::minmax(u, v);
          if (std::find(e.begin(), e.end(), Edge{p.first, p.second}) != e.end()) continue;
          e.push_back({p.first, p.second});
        }
        g = MultiGraph(n, std::move(e));
      }
    } else {
      const int k = std::uniform_int_distribution<int>(3, 4)(rng);
      if (n / 2 < k) continue;
      g = random_bipartite_regular(rng, n / 2, k);
      label = "bipartite" + std::to_string(k);
    }
    if (!g || !is_matching_covered(*g).matching_covered) continue;
    if (!seen.insert(canonical_code(*g)).second) continue;
    out.push_back({label + "-n" + std::to_string(n) + "-" + std::to_string(out.size()), std::move(*g)});
  }
  return out;
}

std::vector<NamedGraph> named_family() {
  return {
      {"C4", named::cycle(4)},
      {"C6", named::cycle(6)},
      {"K4", named::complete(4)},
      {"K3,3", named::complete_bipartite(3, 3)},
      {"prism", named::prism()},
      {"CL5", named::circular_ladder(5)},
      {"Petersen", named::petersen()},
      {"Petersen+spoke", named::with_parallel(named::petersen(), 10)},
      {"K2", MultiGraph(2, {{0, 1}})},
  };
}

}  // namespace pml::corpus
