#include "pml/named_graphs.hpp"

namespace pml::named {

MultiGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return MultiGraph(n, std::move(e));
}

MultiGraph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return MultiGraph(n, std::move(e));
}

MultiGraph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return MultiGraph(a + b, std::move(e));
}

MultiGraph prism() {
  return MultiGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

MultiGraph circular_ladder(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k});
  for (int i = 0; i < k; ++i) e.push_back({k + i, k + (i + 1) % k});
  for (int i = 0; i < k; ++i) e.push_back({i, k + i});
  return MultiGraph(2 * k, std::move(e));
}

MultiGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
  for (int i = 0; i < 5; ++i) e.push_back({i, 5 + i});
  return MultiGraph(10, std::move(e));
}

MultiGraph wheel(int k) {
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.push_back({1 + i, 1 + (i + 1) % k});
  for (int i = 0; i < k; ++i) e.push_back({0, 1 + i});
  return MultiGraph(k + 1, std::move(e));
}

MultiGraph with_parallel(const MultiGraph& g, EdgeId e) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(g.edge(e));
  return MultiGraph(g.num_vertices(), std::move(edges));
}

}  // namespace pml::named
