#pragma once

#include <vector>

#include "pml/rational.hpp"

namespace pml {

struct HnfResult {
  IntMatrix form;       // same shape as the input; zero rows last
  IntMatrix transform;  // unimodular, form = transform * input (empty if not requested)
  int rank = 0;
};

/// Row-style Hermite normal form: pivot columns strictly increase, pivots positive,
/// entries above a pivot reduced into [0, pivot). When the transform is computed its
/// determinant is checked to be +-1 exactly.
HnfResult hnf(const IntMatrix& m, bool with_transform = true);

/// Nonzero rows of the HNF; equal for two generating sets iff they span the same lattice.
IntMatrix hnf_basis(const HnfResult& h);
IntMatrix lattice_hnf(const std::vector<IntVector>& generators, int dim);

bool lattice_contains(const IntMatrix& hnf_rows, const IntVector& v);
inline bool lattice_contains(const HnfResult& h, const IntVector& v) {
  return lattice_contains(hnf_basis(h), v);
}
bool lattice_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b, int dim);

Integer determinant(const IntMatrix& m);  // Bareiss
int rational_rank(const std::vector<RationalVector>& vectors);
int rational_rank(const std::vector<IntVector>& vectors);
bool in_linear_hull(const std::vector<IntVector>& vectors, const IntVector& v);

/// Basis of {w in Z^d : A w = 0} for the rows of A.
IntMatrix integer_kernel(const IntMatrix& a, int dim);
/// Basis of lin(rows) ∩ Z^d.
IntMatrix saturation(const IntMatrix& rows, int dim);

}  // namespace pml
