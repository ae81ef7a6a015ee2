#include <gtest/gtest.h>

#include "pml/graph.hpp"
#include "pml/matching.hpp"
#include "pml/named_graphs.hpp"

using namespace pml;

TEST(MultiGraph, RejectsSelfLoopsAndBadIds) {
  EXPECT_THROW(MultiGraph(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(MultiGraph(3, {{0, 3}}), InvalidArgument);
  EXPECT_NO_THROW(MultiGraph(2, {{0, 1}, {1, 0}}));
}

TEST(MultiGraph, IncidenceAscending) {
  MultiGraph g(3, {{0, 1}, {1, 2}, {0, 1}});
  ASSERT_EQ(g.degree(1), 3);
  EXPECT_EQ(std::vector<EdgeId>(g.incident(1).begin(), g.incident(1).end()),
            (std::vector<EdgeId>{0, 1, 2}));
}

TEST(Cut, NormalisedAwayFromRoot) {
  auto g = named::prism();
  Cut a = make_cut(g, {0, 1, 2});
  Cut b = make_cut(g, {3, 4, 5});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.shore, (VertexSet{3, 4, 5}));
  EXPECT_EQ(a.edges, (EdgeSet{6, 7, 8}));
  EXPECT_TRUE(a.odd);
  EXPECT_FALSE(a.trivial);
  EXPECT_TRUE(make_cut(g, {4}).trivial);
}

TEST(Contract, PrismTriangleGivesK4) {
  auto g = named::prism();
  auto r = contract(g, {0, 1, 2});
  EXPECT_EQ(r.graph.num_vertices(), 4);
  EXPECT_EQ(r.graph.num_edges(), 6);
  EXPECT_EQ(r.contracted, 3);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(r.graph.degree(v), 3);
  // simple: every pair adjacent exactly once
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : r.graph.edges()) pairs.insert(std::minmax(e.u, e.v));
  EXPECT_EQ(pairs.size(), 6u);
  for (EdgeId e = 0; e < r.graph.num_edges(); ++e) {
    const Edge& pe = g.edge(r.edge_map[e]);
    EXPECT_EQ(r.vertex_map[pe.u] == r.contracted || r.vertex_map[pe.v] == r.contracted,
              r.graph.edge(e).u == 3 || r.graph.edge(e).v == 3);
  }
}

TEST(Contract, SingletonIsRelabelling) {
  auto g = named::petersen();
  auto r = contract(g, {4});
  EXPECT_EQ(r.graph.num_vertices(), 10);
  EXPECT_EQ(r.graph.num_edges(), 15);
  EXPECT_THROW(contract(g, {}), InvalidArgument);
}

TEST(Contract, EdgeAndVertexCountIdentity) {
  for (const auto& [g, shore] : std::vector<std::pair<MultiGraph, VertexSet>>{
           {named::prism(), {0, 1, 2}},
           {named::petersen(), {0, 1, 2, 3, 4}},
           {named::circular_ladder(5), {0, 1, 2, 3, 4}},
           {named::petersen(), {0, 1, 2}}}) {
    auto c = make_cut(g, shore);
    auto a = contract(g, c.shore);
    auto b = contract(g, complement(g, c.shore));
    EXPECT_EQ(a.graph.num_edges() + b.graph.num_edges(), g.num_edges() + (int)c.edges.size());
    EXPECT_EQ(a.graph.num_vertices() + b.graph.num_vertices(), g.num_vertices() + 2);
  }
}

TEST(Contract, PullbackOfCompatibleMatchingsIsPerfect) {
  auto g = named::circular_ladder(5);
  auto c = make_cut(g, {0, 1, 2, 3, 4});
  auto a = contract(g, c.shore);
  auto b = contract(g, complement(g, c.shore));
  auto ma = enumerate_perfect_matchings(a.graph, 1000);
  auto mb = enumerate_perfect_matchings(b.graph, 1000);
  int combined = 0;
  for (const auto& x : ma) {
    auto px = pull_back(x, a.edge_map);
    EdgeSet xc;
    std::set_intersection(px.edges.begin(), px.edges.end(), c.edges.begin(), c.edges.end(),
                          std::back_inserter(xc));
    if (xc.size() != 1) continue;
    for (const auto& y : mb) {
      auto py = pull_back(y, b.edge_map);
      if (!contains(py.edges, xc[0])) continue;
      Matching u;
      std::set_union(px.edges.begin(), px.edges.end(), py.edges.begin(), py.edges.end(),
                     std::back_inserter(u.edges));
      EXPECT_TRUE(is_perfect_matching(g, u));
      ++combined;
    }
  }
  EXPECT_GT(combined, 0);
}

TEST(Subgraphs, InducedAndComponents) {
  auto g = named::cycle(6);
  auto r = induced_subgraph(g, {0, 1, 2});
  EXPECT_EQ(r.graph.num_vertices(), 3);
  EXPECT_EQ(r.graph.num_edges(), 2);
  EXPECT_EQ(r.vertex_map[4], -1);
  std::vector<char> removed(6, 0);
  removed[0] = removed[3] = 1;
  auto comps = connected_components(g, removed);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{4, 5}));
  EXPECT_TRUE(is_bipartite(g));
  EXPECT_FALSE(is_bipartite(named::complete(4)));
  EXPECT_FALSE(is_connected(MultiGraph(4, {{0, 1}, {2, 3}})));
}
