#include "pml/simplex.hpp"

#include <algorithm>

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

// Solves M y = r for square nonsingular M; throws if singular.
RationalVector solve_square(std::vector<RationalVector> m, RationalVector r) {
  const int k = static_cast<int>(m.size());
  for (int c = 0; c < k; ++c) {
    int p = c;
    while (p < k && m[ix(p)][ix(c)] == 0) ++p;
    if (p == k) throw InvariantViolation("simplex basis matrix is singular");
    std::swap(m[ix(p)], m[ix(c)]);
    std::swap(r[ix(p)], r[ix(c)]);
    for (int i = 0; i < k; ++i) {
      if (i == c || m[ix(i)][ix(c)] == 0) continue;
      const Rational f = m[ix(i)][ix(c)] / m[ix(c)][ix(c)];
      for (int j = c; j < k; ++j) m[ix(i)][ix(j)] -= f * m[ix(c)][ix(j)];
      r[ix(i)] -= f * r[ix(c)];
    }
  }
  for (int i = 0; i < k; ++i) r[ix(i)] /= m[ix(i)][ix(i)];
  return r;
}

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) {
    m_ = static_cast<int>(lp.rows.size());
    n_ = lp.num_vars;
    t_.assign(ix(m_), RationalVector(ix(n_ + m_)));
    b_.resize(ix(m_));
    for (int i = 0; i < m_; ++i) {
      const bool flip = lp.rhs[ix(i)] < 0;
      for (int j = 0; j < n_; ++j) t_[ix(i)][ix(j)] = flip ? -lp.rows[ix(i)][ix(j)] : lp.rows[ix(i)][ix(j)];
      t_[ix(i)][ix(n_ + i)] = 1;
      b_[ix(i)] = flip ? -lp.rhs[ix(i)] : lp.rhs[ix(i)];
      basis_.push_back(n_ + i);
      orig_row_.push_back(i);
    }
  }

  bool is_free(int j) const { return j < n_ && !lp_.free.empty() && lp_.free[ix(j)]; }
  bool is_active(int j) const { return j < n_ && (lp_.active.empty() || lp_.active[ix(j)]); }

  // Returns false if unbounded.
  bool optimise(const RationalVector& cost, bool allow_artificial) {
    const int cols = n_ + m_;
    std::vector<char> basic(ix(cols), 0);
    for (;;) {
      std::fill(basic.begin(), basic.end(), 0);
      for (int v : basis_) basic[ix(v)] = 1;
      int enter = -1;
      int dir = 0;
      for (int j = 0; j < cols && enter < 0; ++j) {
        if (basic[ix(j)]) continue;
        if (j < n_ ? !is_active(j) : !allow_artificial) continue;
        Rational d = cost[ix(j)];
        for (std::size_t i = 0; i < basis_.size(); ++i)
          if (t_[i][ix(j)] != 0) d -= cost[ix(basis_[i])] * t_[i][ix(j)];
        if (d < 0) {
          enter = j;
          dir = 1;
        } else if (d > 0 && is_free(j)) {
          enter = j;
          dir = -1;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (is_free(basis_[i])) continue;
        const Rational a = dir > 0 ? t_[i][ix(enter)] : Rational(-t_[i][ix(enter)]);
        if (a <= 0) continue;
        const Rational ratio = b_[i] / a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[ix(leave)])) {
          leave = static_cast<int>(i);
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    auto& row = t_[ix(r)];
    const Rational p = row[ix(c)];
    for (auto& x : row)
      if (x != 0) x /= p;
    b_[ix(r)] /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (static_cast<int>(i) == r || t_[i][ix(c)] == 0) continue;
      const Rational f = t_[i][ix(c)];
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) t_[i][j] -= f * row[j];
      b_[i] -= f * b_[ix(r)];
    }
    basis_[ix(r)] = c;
  }

  // Pivot remaining artificials out of the basis, dropping redundant rows.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < basis_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < n_ && col < 0; ++j)
        if (is_active(j) && t_[i][ix(j)] != 0 &&
            std::find(basis_.begin(), basis_.end(), j) == basis_.end())
          col = j;
      if (col >= 0) {
        pivot(static_cast<int>(i), col);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<long>(i));
        b_.erase(b_.begin() + static_cast<long>(i));
        basis_.erase(basis_.begin() + static_cast<long>(i));
        orig_row_.erase(orig_row_.begin() + static_cast<long>(i));
      }
    }
  }

  Rational artificial_sum() const {
    Rational s = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] >= n_) s += b_[i];
    return s;
  }

  RationalVector point() const {
    RationalVector x(ix(n_));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < n_) x[ix(basis_[i])] = b_[i];
    return x;
  }

  const std::vector<int>& basis() const { return basis_; }
  const std::vector<int>& orig_rows() const { return orig_row_; }
  int num_vars() const { return n_; }
  int num_rows() const { return m_; }

 private:
  const LinearProgram& lp_;
  int m_ = 0, n_ = 0;
  std::vector<RationalVector> t_;
  RationalVector b_;
  std::vector<int> basis_;
  std::vector<int> orig_row_;
};

// Primal feasibility, complementary dual feasibility and equal objectives.
void certify(const LinearProgram& lp, const Tableau& tab, const RationalVector& x,
             const RationalVector& cost) {
  const int n = lp.num_vars;
  auto is_free = [&](int j) { return !lp.free.empty() && lp.free[ix(j)]; };
  auto is_active = [&](int j) { return lp.active.empty() || lp.active[ix(j)]; };
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    Rational s = 0;
    for (int j = 0; j < n; ++j)
      if (lp.rows[i][ix(j)] != 0) s += lp.rows[i][ix(j)] * x[ix(j)];
    if (s != lp.rhs[i]) throw InvariantViolation("simplex point violates an equality row");
  }
  for (int j = 0; j < n; ++j) {
    if (!is_active(j) && x[ix(j)] != 0) throw InvariantViolation("simplex moved an inactive variable");
    if (!is_free(j) && x[ix(j)] < 0) throw InvariantViolation("simplex point violates a lower bound");
  }
  const auto& basis = tab.basis();
  const auto& rows = tab.orig_rows();
  const int k = static_cast<int>(basis.size());
  // y^T B = c_B, i.e. B^T y = c_B.
  std::vector<RationalVector> bt(ix(k), RationalVector(ix(k)));
  RationalVector cb(ix(k));
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < k; ++r) bt[ix(c)][ix(r)] = lp.rows[ix(rows[ix(r)])][ix(basis[ix(c)])];
    cb[ix(c)] = cost[ix(basis[ix(c)])];
  }
  const RationalVector y = solve_square(bt, cb);
  Rational dual_obj = 0;
  for (int r = 0; r < k; ++r) dual_obj += y[ix(r)] * lp.rhs[ix(rows[ix(r)])];
  Rational primal_obj = 0;
  for (int j = 0; j < n; ++j) primal_obj += cost[ix(j)] * x[ix(j)];
  if (dual_obj != primal_obj) throw InvariantViolation("simplex duality gap is nonzero");
  for (int j = 0; j < n; ++j) {
    if (!is_active(j)) continue;
    Rational d = cost[ix(j)];
    for (int r = 0; r < k; ++r) d -= y[ix(r)] * lp.rows[ix(rows[ix(r)])][ix(j)];
    if (is_free(j) ? d != 0 : d < 0) throw InvariantViolation("simplex reduced cost has the wrong sign");
  }
}

}  // namespace

bool is_relaxation_lp(const LinearProgram& lp) {
  for (char f : lp.free)
    if (f) return false;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rhs[i] != 1) return false;
    for (const auto& a : lp.rows[i])
      if (a != 0 && a != 1) return false;
  }
  return true;
}

VertexSolution simplex_solve(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (lp.rows.size() != lp.rhs.size()) throw InvalidArgument("row and rhs counts differ");
  for (const auto& r : lp.rows)
    if (static_cast<int>(r.size()) != n) throw InvalidArgument("row length differs from variable count");
  if (static_cast<int>(lp.objective.size()) != n) throw InvalidArgument("objective length differs from variable count");
  if (!lp.free.empty() && static_cast<int>(lp.free.size()) != n) throw InvalidArgument("bad free mask");
  if (!lp.active.empty() && static_cast<int>(lp.active.size()) != n) throw InvalidArgument("bad active mask");

  Tableau tab(lp);
  const int m = static_cast<int>(lp.rows.size());
  VertexSolution out;
  RationalVector phase1(ix(n + m));
  for (int i = 0; i < m; ++i) phase1[ix(n + i)] = 1;
  tab.optimise(phase1, true);  // bounded below by 0
  if (tab.artificial_sum() != 0) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  tab.drive_out_artificials();
  RationalVector cost(ix(n + m));
  for (int j = 0; j < n; ++j) cost[ix(j)] = lp.sense == Sense::Max ? -lp.objective[ix(j)] : lp.objective[ix(j)];
  if (!tab.optimise(cost, false)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.point = tab.point();
  certify(lp, tab, out.point, cost);
  out.objective = 0;
  for (int j = 0; j < n; ++j) out.objective += lp.objective[ix(j)] * out.point[ix(j)];
  out.basis_columns = tab.basis();
  std::sort(out.basis_columns.begin(), out.basis_columns.end());

  auto& stats = exactness_stats();
  ++stats.lp_vertices;
  if (is_relaxation_lp(lp)) {
    ++stats.relaxation_vertices;
    if (!is_half_integral(out.point)) {
      ++stats.non_half_integral_vertices;
      throw InvariantViolation("vertex of a bipartite relaxation is not half-integral");
    }
  } else if (std::find(lp.free.begin(), lp.free.end(), char{1}) != lp.free.end()) {
    ++stats.free_variable_vertices;
    // Free coordinates may be negative, so only the denominators are checked here.
    const bool halves = std::all_of(out.point.begin(), out.point.end(), [](const Rational& q) {
      return q.get_den() == 1 || q.get_den() == 2;
    });
    if (!halves) ++stats.free_non_half_integral;
  }
  return out;
}

LinearProgram degree_lp(const MultiGraph& g, const EdgeSet& edges) {
  LinearProgram lp;
  lp.num_vars = g.num_edges();
  lp.active.assign(ix(g.num_edges()), 0);
  for (EdgeId e : edges) lp.active[ix(e)] = 1;
  lp.rows.assign(ix(g.num_vertices()), RationalVector(ix(g.num_edges())));
  lp.rhs.assign(ix(g.num_vertices()), Rational(1));
  for (EdgeId e : edges) {
    lp.rows[ix(g.edge(e).u)][ix(e)] = 1;
    lp.rows[ix(g.edge(e).v)][ix(e)] = 1;
  }
  lp.objective.assign(ix(g.num_edges()), Rational(0));
  return lp;
}

}  // namespace pml
