#include "pml/lattice.hpp"

#include <algorithm>

#include "pml/graph.hpp"

namespace pml {

namespace {

inline std::size_t ix(int i) { return static_cast<std::size_t>(i); }

// row_a -= q * row_b
void sub_mul(IntVector& a, const IntVector& b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (b[j] != 0) a[j] -= q * b[j];
}

IntMatrix identity(int n) {
  IntMatrix u(ix(n), IntVector(ix(n), 0));
  for (int i = 0; i < n; ++i) u[ix(i)][ix(i)] = 1;
  return u;
}

int column_count(const IntMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t c = m[0].size();
  for (const auto& r : m)
    if (r.size() != c) throw InvalidArgument("ragged integer matrix");
  return static_cast<int>(c);
}

std::vector<RationalVector> to_rational(const std::vector<IntVector>& v) {
  std::vector<RationalVector> out;
  out.reserve(v.size());
  for (const auto& r : v) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

HnfResult hnf(const IntMatrix& m, bool with_transform) {
  const int rows = static_cast<int>(m.size());
  const int cols = column_count(m);
  HnfResult h;
  h.form = m;
  if (with_transform) h.transform = identity(rows);
  auto& H = h.form;
  auto& U = h.transform;
  auto swap_rows = [&](int a, int b) {
    std::swap(H[ix(a)], H[ix(b)]);
    if (with_transform) std::swap(U[ix(a)], U[ix(b)]);
  };
  auto reduce = [&](int target, int by, const Integer& q) {
    sub_mul(H[ix(target)], H[ix(by)], q);
    if (with_transform) sub_mul(U[ix(target)], U[ix(by)], q);
  };
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    for (;;) {
      int k = -1;
      for (int i = r; i < rows; ++i)
        if (H[ix(i)][ix(j)] != 0 && (k < 0 || abs(H[ix(i)][ix(j)]) < abs(H[ix(k)][ix(j)]))) k = i;
      if (k < 0) break;
      swap_rows(r, k);
      bool clean = true;
      for (int i = r + 1; i < rows; ++i) {
        if (H[ix(i)][ix(j)] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), H[ix(i)][ix(j)].get_mpz_t(), H[ix(r)][ix(j)].get_mpz_t());
        reduce(i, r, q);
        if (H[ix(i)][ix(j)] != 0) clean = false;
      }
      if (clean) break;
    }
    if (H[ix(r)][ix(j)] == 0) continue;
    if (H[ix(r)][ix(j)] < 0) {
      for (auto& x : H[ix(r)]) x = -x;
      if (with_transform)
        for (auto& x : U[ix(r)]) x = -x;
    }
    for (int i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H[ix(i)][ix(j)].get_mpz_t(), H[ix(r)][ix(j)].get_mpz_t());
      reduce(i, r, q);
    }
    ++r;
  }
  h.rank = r;
  if (with_transform) {
    auto& stats = exactness_stats();
    ++stats.transforms_checked;
    const Integer d = determinant(U);
    if (d != 1 && d != -1) {
      ++stats.bad_determinants;
      throw InvariantViolation("HNF transform is not unimodular");
    }
  }
  return h;
}

IntMatrix hnf_basis(const HnfResult& h) {
  return IntMatrix(h.form.begin(), h.form.begin() + h.rank);
}

bool lattice_contains(const IntMatrix& rows, const IntVector& v) {
  IntVector w = v;
  std::size_t col = 0;
  for (const auto& row : rows) {
    if (row.size() != w.size()) throw InvalidArgument("vector dimension differs from lattice dimension");
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    for (; col < p; ++col)
      if (w[col] != 0) return false;
    if (!mpz_divisible_p(w[p].get_mpz_t(), row[p].get_mpz_t())) return false;
    const Integer q = w[p] / row[p];
    sub_mul(w, row, q);
    col = p + 1;
  }
  for (; col < w.size(); ++col)
    if (w[col] != 0) return false;
  return true;
}

IntMatrix lattice_hnf(const std::vector<IntVector>& generators, int dim) {
  IntMatrix basis;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) throw InvalidArgument("generator has wrong dimension");
    if (lattice_contains(basis, g)) continue;
    basis.push_back(g);
    basis = hnf_basis(hnf(basis, false));
  }
  return basis;
}

bool lattice_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b, int dim) {
  return lattice_hnf(a, dim) == lattice_hnf(b, dim);
}

Integer determinant(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (column_count(m) != n && n > 0) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[ix(k)][ix(k)] == 0) {
      int p = k + 1;
      while (p < n && a[ix(p)][ix(k)] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[ix(p)], a[ix(k)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[ix(i)][ix(j)] = a[ix(i)][ix(j)] * a[ix(k)][ix(k)] - a[ix(i)][ix(k)] * a[ix(k)][ix(j)];
        mpz_divexact(a[ix(i)][ix(j)].get_mpz_t(), a[ix(i)][ix(j)].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[ix(k)][ix(k)];
  }
  return sign * a[ix(n - 1)][ix(n - 1)];
}

int rational_rank(const std::vector<RationalVector>& vectors) {
  std::vector<RationalVector> a = vectors;
  if (a.empty()) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rational_rank(const std::vector<IntVector>& vectors) { return rational_rank(to_rational(vectors)); }

bool in_linear_hull(const std::vector<IntVector>& vectors, const IntVector& v) {
  auto with = vectors;
  with.push_back(v);
  return rational_rank(with) == rational_rank(vectors);
}

IntMatrix integer_kernel(const IntMatrix& a, int dim) {
  IntMatrix at(ix(dim), IntVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(a[i].size()) != dim) throw InvalidArgument("row has wrong dimension");
    for (int j = 0; j < dim; ++j) at[ix(j)][i] = a[i][ix(j)];
  }
  const HnfResult h = hnf(at, true);
  return IntMatrix(h.transform.begin() + h.rank, h.transform.end());
}

IntMatrix saturation(const IntMatrix& rows, int dim) {
  return hnf_basis(hnf(integer_kernel(integer_kernel(rows, dim), dim), false));
}

}  // namespace pml
