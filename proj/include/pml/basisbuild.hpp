#pragma once

// Lattice bases of perfect matching lattices made of perfect matchings.

#include <stdexcept>
#include <string>
#include <vector>

#include "pml/graph.hpp"

namespace pml {

/// How a basis was put together. step is one of bvn-run, petersen, replicate, compose,
/// triple-augment, product, core.
struct Provenance {
  std::string step;
  std::string detail;
  std::vector<Provenance> children;
};

struct Basis {
  std::vector<Matching> matchings;
  Provenance provenance;
};

/// run_bvn got stuck on a brick without producing a fractional vertex.
class UnsupportedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The six perfect matchings of the underlying Petersen graph, then one extra element
/// per additional parallel copy (M minus the representative plus the copy).
Basis petersen_basis(const MultiGraph& g);

/// Rewrites edge ids of a basis of a derived graph into the parent's ids.
Basis lift(const Basis& b, const std::vector<EdgeId>& edge_map);

/// Pairs the bases of the two c-contractions (already in g's edge ids) edge by edge over
/// c. Size |b1| + |b2| - |c|.
Basis compose(const MultiGraph& g, const Cut& c, const Basis& shore_shrunk, const Basis& complement_shrunk);

/// A basis of a brick: Petersen base case, run_bvn, or a robust cut with both sides
/// solved recursively plus one matching crossing the cut three times.
Basis brick_basis(const MultiGraph& g);

/// A basis of L(g) for any g with a perfect matching.
Basis lattice_basis(const MultiGraph& g);

}  // namespace pml
