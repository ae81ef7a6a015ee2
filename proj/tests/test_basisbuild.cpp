#include <gtest/gtest.h>

#include <functional>

#include "pml/basisbuild.hpp"
#include "pml/corpus.hpp"
#include "pml/lattice.hpp"
#include "pml/matching.hpp"
#include "pml/named_graphs.hpp"
#include "pml/tightcut.hpp"

using namespace pml;

namespace {

std::vector<IntVector> rows_of(const MultiGraph& g, const std::vector<Matching>& ms) {
  std::vector<IntVector> rows;
  for (const auto& m : ms) rows.push_back(to_int_vector(incidence_vector(g, m)));
  return rows;
}

// Brute force: the basis spans exactly the lattice of all perfect matchings.
void expect_lattice_basis(const MultiGraph& g, const Basis& b) {
  for (const auto& m : b.matchings) EXPECT_TRUE(is_perfect_matching(g, m)) << to_string(m);
  const auto basis_rows = rows_of(g, b.matchings);
  EXPECT_EQ(rational_rank(basis_rows), static_cast<int>(b.matchings.size()));
  const auto all = rows_of(g, enumerate_perfect_matchings(g, 200000));
  EXPECT_EQ(rational_rank(all), static_cast<int>(b.matchings.size()));
  EXPECT_TRUE(lattice_equal(basis_rows, all, g.num_edges()));
}

int count_steps(const Provenance& p, const std::string& step) {
  int k = p.step == step ? 1 : 0;
  for (const auto& c : p.children) k += count_steps(c, step);
  return k;
}

MultiGraph joined_squares() {
  // Two 4-cycles and a bridge that no perfect matching uses.
  return MultiGraph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {3, 4}});
}

}  // namespace

TEST(PetersenBasis, Plain) {
  const auto g = named::petersen();
  const auto b = petersen_basis(g);
  EXPECT_EQ(b.matchings.size(), 6u);
  EXPECT_EQ(b.provenance.step, "petersen");
  expect_lattice_basis(g, b);
}

TEST(PetersenBasis, ParallelSpoke) {
  const auto g = named::with_parallel(named::petersen(), 10);
  const auto b = petersen_basis(g);
  ASSERT_EQ(b.matchings.size(), 7u);
  int with_copy = 0;
  for (const auto& m : b.matchings) with_copy += contains(m.edges, 15) ? 1 : 0;
  EXPECT_EQ(with_copy, 1);
  EXPECT_EQ(count_steps(b.provenance, "replicate"), 1);
  expect_lattice_basis(g, b);
}

TEST(PetersenBasis, TwoExtraCopies) {
  const auto g = named::with_parallel(named::with_parallel(named::petersen(), 0), 12);
  const auto b = petersen_basis(g);
  EXPECT_EQ(b.matchings.size(), 8u);
  expect_lattice_basis(g, b);
}

TEST(PetersenBasis, RejectsOtherGraphs) {
  EXPECT_THROW(petersen_basis(named::prism()), InvalidArgument);
}

TEST(Compose, PrismSizes) {
  // The triangle cut of the prism is separating; both sides are K4.
  const auto g = named::prism();
  const Cut c = make_cut(g, {0, 1, 2});
  const auto a = contract(g, c.shore);
  const auto o = contract(g, complement(g, c.shore));
  const Basis ba = lift(lattice_basis(a.graph), a.edge_map);
  const Basis bo = lift(lattice_basis(o.graph), o.edge_map);
  ASSERT_EQ(ba.matchings.size(), 3u);
  const Basis b = compose(g, c, ba, bo);
  EXPECT_EQ(b.matchings.size(), 3u);
  EXPECT_EQ(b.provenance.step, "compose");
  for (const auto& m : b.matchings) EXPECT_EQ(intersection_size(m.edges, c.edges), 1);
}

TEST(Compose, PentagonalPrismSizes) {
  const auto g = named::circular_ladder(5);
  const Cut c = make_cut(g, {0, 1, 2, 3, 4});
  const auto a = contract(g, c.shore);
  const auto o = contract(g, complement(g, c.shore));
  const Basis b = compose(g, c, lift(lattice_basis(a.graph), a.edge_map), lift(lattice_basis(o.graph), o.edge_map));
  EXPECT_EQ(b.matchings.size(), 5u);
}

TEST(Compose, RejectsTripleCrossing) {
  const auto g = named::prism();
  const Cut c = make_cut(g, {0, 1, 2});
  const Basis triple{{Matching{{6, 7, 8}}}, {}};
  EXPECT_THROW(compose(g, c, triple, triple), InvalidArgument);
}

TEST(LatticeBasis, NamedFamily) {
  const std::map<std::string, int> dims = {{"C4", 2},    {"C6", 2},  {"K4", 3},       {"K3,3", 5},
                                           {"prism", 4}, {"CL5", 6}, {"Petersen", 6}, {"Petersen+spoke", 7},
                                           {"K2", 1}};
  for (const auto& [name, g] : corpus::named_family()) {
    SCOPED_TRACE(name);
    const auto b = lattice_basis(g);
    if (dims.count(name)) {
      EXPECT_EQ(static_cast<int>(b.matchings.size()), dims.at(name));
    }
    expect_lattice_basis(g, b);
  }
}

TEST(LatticeBasis, PrismUsesTriple) {
  const auto b = lattice_basis(named::prism());
  EXPECT_EQ(b.matchings.size(), 4u);
  EXPECT_EQ(b.provenance.step, "triple-augment");
  EXPECT_EQ(b.matchings.back(), (Matching{{6, 7, 8}}));
}

TEST(LatticeBasis, UncoveredEdgesAndProduct) {
  const auto g = joined_squares();
  const auto b = lattice_basis(g);
  EXPECT_EQ(b.matchings.size(), 3u);
  EXPECT_EQ(b.provenance.step, "core");
  EXPECT_EQ(count_steps(b.provenance, "product"), 1);
  for (const auto& m : b.matchings) EXPECT_FALSE(contains(m.edges, 8));
  expect_lattice_basis(g, b);
}

TEST(LatticeBasis, NoPerfectMatching) {
  EXPECT_THROW(lattice_basis(MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}})), InvalidArgument);
}

TEST(LatticeBasis, PetersenSplicedWithBrace) {
  // Vertex 0 of Petersen spliced with a vertex of K3,3: a tight cut with a Petersen side.
  const auto p = named::petersen();
  std::vector<Edge> es(p.edges().begin(), p.edges().end());
  int k = 0;
  for (Edge& e : es)
    if (e.u == 0 || e.v == 0) {
      VertexId& end = e.u == 0 ? e.u : e.v;
      end = k == 0 ? 0 : 9 + k;
      ++k;
    }
  for (VertexId a : {0, 10, 11})
    for (VertexId b : {12, 13}) es.push_back({a, b});
  const MultiGraph g(14, es);
  ASSERT_EQ(tight_cut_decomposition(g).brick_count(), 1);
  const auto b = lattice_basis(g);
  EXPECT_EQ(count_steps(b.provenance, "petersen"), 1);
  expect_lattice_basis(g, b);
}

TEST(LatticeBasisProperty, ExhaustiveUpToEight) {
  int checked = 0;
  for (const auto& [name, g] : corpus::exhaustive_matching_covered(8)) {
    // The oracle enumeration dominates; every 5th keeps the test short.
    if (checked++ % 5 != 0) continue;
    SCOPED_TRACE(name);
    expect_lattice_basis(g, lattice_basis(g));
  }
  EXPECT_GT(checked, 3000);
}

TEST(LatticeBasisProperty, RandomGraphs) {
  for (const auto& [name, g] : corpus::random_matching_covered(40, 12, 5)) {
    SCOPED_TRACE(name);
    expect_lattice_basis(g, lattice_basis(g));
  }
}
