#include <gtest/gtest.h>

#include <random>

#include "pml/lattice.hpp"
#include "pml/named_graphs.hpp"
#include "pml/simplex.hpp"

using namespace pml;

namespace {

EdgeSet all_edges(const MultiGraph& g) {
  EdgeSet e(g.num_edges());
  std::iota(e.begin(), e.end(), 0);
  return e;
}

LinearProgram lp1(const MultiGraph& g, EdgeId e) {
  auto lp = degree_lp(g, all_edges(g));
  lp.free.assign(g.num_edges(), 0);
  lp.free[e] = 1;
  lp.objective[e] = 1;
  lp.sense = Sense::Min;
  return lp;
}

// Best objective over all basic feasible solutions (columns subsets of size rank).
std::optional<Rational> brute_force_optimum(const LinearProgram& lp) {
  const int n = lp.num_vars;
  const int m = (int)lp.rows.size();
  std::optional<Rational> best;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) > m) continue;
    std::vector<int> cols;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) cols.push_back(j);
    // Solve A_cols x = b by elimination; accept only unique solutions.
    std::vector<RationalVector> a(m, RationalVector(cols.size() + 1));
    for (int i = 0; i < m; ++i) {
      for (size_t c = 0; c < cols.size(); ++c) a[i][c] = lp.rows[i][cols[c]];
      a[i][cols.size()] = lp.rhs[i];
    }
    size_t r = 0;
    std::vector<int> pivcol;
    for (size_t c = 0; c < cols.size(); ++c) {
      size_t p = r;
      while (p < (size_t)m && a[p][c] == 0) ++p;
      if (p == (size_t)m) break;
      std::swap(a[p], a[r]);
      for (int i = 0; i < m; ++i) {
        if ((size_t)i == r || a[i][c] == 0) continue;
        Rational f = a[i][c] / a[r][c];
        for (size_t j = c; j <= cols.size(); ++j) a[i][j] -= f * a[r][j];
      }
      pivcol.push_back((int)c);
      ++r;
    }
    if (pivcol.size() != cols.size()) continue;
    bool ok = true;
    for (int i = (int)r; i < m; ++i)
      if (a[i][cols.size()] != 0) ok = false;
    if (!ok) continue;
    RationalVector x(n);
    for (size_t c = 0; c < cols.size(); ++c) x[cols[c]] = a[c][cols.size()] / a[c][c];
    for (int j = 0; j < n; ++j)
      if (x[j] < 0) ok = false;
    if (!ok) continue;
    Rational obj = 0;
    for (int j = 0; j < n; ++j) obj += lp.objective[j] * x[j];
    if (!best || (lp.sense == Sense::Min ? obj < *best : obj > *best)) best = obj;
  }
  return best;
}

}  // namespace

TEST(Simplex, MaximiseEdgeOnC4) {
  auto g = named::cycle(4);
  for (EdgeId e = 0; e < 4; ++e) {
    auto lp = degree_lp(g, all_edges(g));
    lp.objective[e] = 1;
    lp.sense = Sense::Max;
    auto s = simplex_solve(lp);
    ASSERT_EQ(s.status, LpStatus::Optimal);
    EXPECT_EQ(s.objective, 1);
    EXPECT_EQ(s.point[e], 1);
    EXPECT_EQ(s.point[(e + 2) % 4], 1);
  }
}

TEST(Simplex, RelaxedEdgeValues) {
  auto k4 = named::complete(4);
  for (EdgeId e = 0; e < 6; ++e) EXPECT_EQ(simplex_solve(lp1(k4, e)).objective, 0);
  auto c4 = named::cycle(4);
  for (EdgeId e = 0; e < 4; ++e) EXPECT_EQ(simplex_solve(lp1(c4, e)).objective, 0);
  auto c6 = named::cycle(6);
  for (EdgeId e = 0; e < 6; ++e) {
    auto s = simplex_solve(lp1(c6, e));
    ASSERT_EQ(s.status, LpStatus::Optimal);
    // Same-parity edges of an even cycle carry equal values, so x_e >= 0 is implied.
    EXPECT_EQ(s.objective, 0);
  }
  auto pr = named::prism();
  EXPECT_EQ(simplex_solve(lp1(pr, 6)).objective, -1);
}

TEST(Simplex, PrismRungs) {
  auto g = named::prism();
  auto lp = degree_lp(g, all_edges(g));
  lp.objective[6] = 1;
  lp.sense = Sense::Max;
  auto s = simplex_solve(lp);
  EXPECT_EQ(s.objective, 1);
  EXPECT_TRUE(is_integral(s.point));
  lp.objective.assign(9, 0);
  lp.objective[6] = lp.objective[7] = lp.objective[8] = 1;
  lp.sense = Sense::Min;
  s = simplex_solve(lp);
  EXPECT_EQ(s.objective, 0);
  for (int e = 0; e < 6; ++e) EXPECT_EQ(s.point[e], Rational(1, 2));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  auto path = MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}});
  auto lp = degree_lp(path, {0, 1, 2});
  EXPECT_EQ(simplex_solve(lp).status, LpStatus::Infeasible);
  LinearProgram u;
  u.num_vars = 2;
  u.rows = {{1, -1}};
  u.rhs = {0};
  u.objective = {1, 0};
  u.sense = Sense::Max;
  EXPECT_EQ(simplex_solve(u).status, LpStatus::Unbounded);
}

TEST(Simplex, AgreesWithBasisEnumeration) {
  std::mt19937 rng(99);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp;
    int m = std::uniform_int_distribution<int>(1, 3)(rng);
    lp.num_vars = std::uniform_int_distribution<int>(m, 6)(rng);
    std::uniform_int_distribution<int> coef(0, 3), rhs(0, 6), obj(-4, 4);
    for (int i = 0; i < m; ++i) {
      RationalVector r(lp.num_vars);
      for (auto& x : r) x = coef(rng);
      lp.rows.push_back(r);
      lp.rhs.push_back(rhs(rng));
    }
    // A final all-positive row keeps the region bounded.
    lp.rows.push_back(RationalVector(lp.num_vars, 1));
    lp.rhs.push_back(5);
    lp.objective.resize(lp.num_vars);
    for (auto& x : lp.objective) x = obj(rng);
    lp.sense = trial % 2 ? Sense::Max : Sense::Min;
    auto bf = brute_force_optimum(lp);
    auto s = simplex_solve(lp);
    ASSERT_EQ(s.status == LpStatus::Optimal, bf.has_value());
    if (bf) {
      EXPECT_EQ(s.objective, *bf);
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(Hnf, Examples) {
  IntMatrix id = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto h = hnf(id);
  EXPECT_EQ(h.form, id);
  EXPECT_EQ(h.rank, 3);
  auto h2 = hnf({{2, 0}, {0, 2}, {1, 1}});
  EXPECT_EQ(hnf_basis(h2), (IntMatrix{{1, 1}, {0, 2}}));
  EXPECT_EQ(h2.rank, 2);
  EXPECT_TRUE(lattice_contains(h2, {3, 1}));
  EXPECT_FALSE(lattice_contains(h2, {1, 0}));
  EXPECT_FALSE(lattice_contains(IntMatrix{{0, 2}}, {1, 0}));
  EXPECT_THROW(lattice_contains(IntMatrix{{0, 2}}, {1, 0, 0}), InvalidArgument);

  auto p = named::petersen();
  std::vector<IntVector> rows;
  for (const auto& m : enumerate_perfect_matchings(p, 10)) rows.push_back(to_int_vector(incidence_vector(p, m)));
  EXPECT_EQ(hnf(rows).rank, 6);
  EXPECT_EQ(rational_rank(rows), 6);
}

TEST(Hnf, RandomProperties) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int r = std::uniform_int_distribution<int>(1, 6)(rng);
    int c = std::uniform_int_distribution<int>(1, 5)(rng);
    IntMatrix m(r, IntVector(c));
    for (auto& row : m)
      for (auto& x : row) x = val(rng);
    auto h = hnf(m);
    // form = U * m
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        Integer s = 0;
        for (int k = 0; k < r; ++k) s += h.transform[i][k] * m[k][j];
        EXPECT_EQ(s, h.form[i][j]);
      }
    Integer d = determinant(h.transform);
    EXPECT_TRUE(d == 1 || d == -1);
    // idempotent
    EXPECT_EQ(hnf(h.form).form, h.form);
    // shape: pivots increase, positive, upper entries reduced
    int last = -1;
    for (int i = 0; i < h.rank; ++i) {
      int p = 0;
      while (h.form[i][p] == 0) ++p;
      EXPECT_GT(p, last);
      EXPECT_GT(h.form[i][p], 0);
      for (int k = 0; k < i; ++k) {
        EXPECT_GE(h.form[k][p], 0);
        EXPECT_LT(h.form[k][p], h.form[i][p]);
      }
      last = p;
    }
    for (int i = h.rank; i < r; ++i)
      for (int j = 0; j < c; ++j) EXPECT_EQ(h.form[i][j], 0);
    EXPECT_EQ(h.rank, rational_rank(m));
    // random unimodular row operations keep the lattice
    IntMatrix t = m;
    for (int k = 0; k < 10 && r > 1; ++k) {
      int a = std::uniform_int_distribution<int>(0, r - 1)(rng);
      int b = (a + 1 + std::uniform_int_distribution<int>(0, r - 2)(rng)) % r;
      int mult = val(rng);
      for (int j = 0; j < c; ++j) t[a][j] += mult * t[b][j];
      if (k % 3 == 0) std::swap(t[a], t[b]);
    }
    EXPECT_TRUE(lattice_equal(m, t, c));
    EXPECT_EQ(lattice_hnf(m, c), hnf_basis(h));
  }
}

TEST(Hnf, MembershipAgainstBruteForce2D) {
  IntMatrix gens = {{2, 4}, {0, 6}};
  auto b = lattice_hnf(gens, 2);
  for (int x = -8; x <= 8; ++x)
    for (int y = -8; y <= 8; ++y) {
      bool expect = false;
      for (int a = -12; a <= 12 && !expect; ++a)
        for (int c = -12; c <= 12 && !expect; ++c)
          expect = (2 * a == x) && (4 * a + 6 * c == y);
      EXPECT_EQ(lattice_contains(b, {x, y}), expect) << x << "," << y;
    }
}

TEST(Rank, Examples) {
  auto rows_of = [](const MultiGraph& g) {
    std::vector<IntVector> rows;
    for (const auto& m : enumerate_perfect_matchings(g, 100)) rows.push_back(to_int_vector(incidence_vector(g, m)));
    return rows;
  };
  auto k4 = rows_of(named::complete(4));
  EXPECT_EQ(rational_rank(k4), 3);
  auto dup = k4;
  dup.push_back(k4[0]);
  EXPECT_EQ(rational_rank(dup), 3);
  EXPECT_EQ(rational_rank(rows_of(named::prism())), 4);
  EXPECT_TRUE(in_linear_hull(k4, {2, 0, 0, 0, 0, 2}));
  EXPECT_FALSE(in_linear_hull(k4, {1, 0, 0, 0, 0, 0}));
}

TEST(Kernel, SaturationOfPetersenHasIndexTwo) {
  auto p = named::petersen();
  std::vector<IntVector> rows;
  for (const auto& m : enumerate_perfect_matchings(p, 10)) rows.push_back(to_int_vector(incidence_vector(p, m)));
  auto ker = integer_kernel(rows, 15);
  EXPECT_EQ(ker.size(), 9u);
  for (const auto& w : ker)
    for (const auto& r : rows) {
      Integer s = 0;
      for (int j = 0; j < 15; ++j) s += w[j] * r[j];
      EXPECT_EQ(s, 0);
    }
  auto sat = saturation(rows, 15);
  EXPECT_EQ(sat.size(), 6u);
  auto lat = lattice_hnf(rows, 15);
  int outside = 0;
  for (const auto& s : sat) {
    EXPECT_TRUE(in_linear_hull(rows, s));
    if (!lattice_contains(lat, s)) ++outside;
    IntVector twice = s;
    for (auto& x : twice) x *= 2;
    EXPECT_TRUE(lattice_contains(lat, twice));
  }
  EXPECT_GT(outside, 0);
  // K3,3 is Petersen free: saturation equals the lattice.
  auto k33 = named::complete_bipartite(3, 3);
  std::vector<IntVector> kr;
  for (const auto& m : enumerate_perfect_matchings(k33, 10)) kr.push_back(to_int_vector(incidence_vector(k33, m)));
  EXPECT_EQ(saturation(kr, 9), lattice_hnf(kr, 9));
}
