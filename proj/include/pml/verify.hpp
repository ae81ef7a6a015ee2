#pragma once

// Brute-force oracles over enumerated perfect matchings, for desk-scale graphs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pml/graph.hpp"

namespace pml {

struct VerificationCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // always set on failure
};

struct GraphSummary {
  int n = 0;
  int m = 0;
  int bricks = 0;
  int polytope_dim = 0;
  int lattice_dim = 0;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  GraphSummary summary;
  bool overflow = false;  // enumeration hit the cap; oracle checks were not run
  std::string overflow_note;

  /// Every recorded check passed. Overflow alone is not a failure.
  bool passed() const;
  void add(std::string name, bool pass, std::string witness = {});
  void absorb(const VerificationReport& other);
};

/// Dimensions by the formulas, computed on the matching covered core.
GraphSummary summarize(const MultiGraph& g);

/// Perfect matchings, rank = size = lattice dimension, HNF equality with all perfect
/// matchings, and membership of every perfect matching.
VerificationReport check_basis(const MultiGraph& g, const std::vector<Matching>& basis, std::size_t cap = 10000);

/// Integral points of lin(PMs): 2x in the lattice always, x itself when no brick is Petersen.
/// Graphs with a Petersen brick also get a witness point outside the lattice.
VerificationReport check_lovasz_doubling(const MultiGraph& g, int trials = 64, std::uint64_t seed = 1,
                                         std::size_t cap = 100000);

/// Edge facets against the brace and BvN-brick characterizations, odd cut facets against
/// the near-brick characterization.
VerificationReport check_facet_characterizations(const MultiGraph& g, std::size_t cap = 100000,
                                                 std::uint64_t seed = 1);

/// Oracle ranks against the dimension formulas, and the face dimension of separating cuts.
VerificationReport check_dim_formula_consistency(const MultiGraph& g, std::size_t cap = 100000,
                                                 std::uint64_t seed = 1);

/// BvN test without LPs: a spanning subgraph made of single edges and odd cycles, with at
/// least one odd cycle, exists iff the relaxation has a fractional vertex. n <= 20.
bool is_bvn_by_odd_cycles(const MultiGraph& g);

/// Odd cuts with vertex 0 outside the shore: all of them when there are at most all_limit,
/// otherwise `samples` distinct ones drawn with the seed. Trivial cuts included.
std::vector<Cut> sample_odd_cuts(const MultiGraph& g, std::size_t all_limit = 64, std::size_t samples = 32,
                                 std::uint64_t seed = 1);

}  // namespace pml
