#pragma once

#include <vector>

#include "pml/graph.hpp"
#include "pml/matching.hpp"
#include "pml/rational.hpp"

namespace pml {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Equality-form LP: A x = b, x_j >= 0 unless free[j], inactive variables fixed to 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  std::vector<char> free;    // lower bound -inf instead of 0
  std::vector<char> active;  // empty = all active
  RationalVector objective;
  Sense sense = Sense::Min;
};

struct VertexSolution {
  LpStatus status = LpStatus::Infeasible;
  RationalVector point;
  Rational objective;
  std::vector<int> basis_columns;  // ascending
};

/// Two-phase dense tableau simplex with Bland's rule (lowest index). The returned
/// optimum is checked against an independently solved dual before returning;
/// vertices of LPs over the bipartite relaxation are asserted half-integral.
VertexSolution simplex_solve(const LinearProgram& lp);

/// Degree system of g restricted to `edges` (other variables fixed at 0), with
/// objective and sense left empty for the caller.
LinearProgram degree_lp(const MultiGraph& g, const EdgeSet& edges);

/// True if lp is a face of a bipartite relaxation: 0/1 rows, rhs 1, no free variables.
bool is_relaxation_lp(const LinearProgram& lp);

}  // namespace pml
