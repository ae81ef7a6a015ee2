#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pml/graph.hpp"

namespace pml {

enum class Sense { Min, Max };

/// Perfect matching of optimal total weight, or nullopt if none exists.
/// Parallel edges are collapsed to the best-weight copy (smallest id on ties).
std::optional<Matching> max_weight_perfect_matching(const MultiGraph& g,
                                                    const std::vector<std::int64_t>& weights,
                                                    Sense sense);

/// Any perfect matching of g restricted to non-removed vertices and allowed edges.
/// Empty masks mean "everything". Deterministic: ties resolve to the smallest edge id.
std::optional<Matching> find_perfect_matching(const MultiGraph& g,
                                              const std::vector<char>& vertex_removed = {},
                                              const std::vector<char>& edge_forbidden = {});

/// Size of a maximum matching on the non-removed vertices.
int maximum_matching_size(const MultiGraph& g, const std::vector<char>& vertex_removed = {});

/// Gallai-Edmonds set A: vertices never missed by a maximum matching but adjacent to
/// one that is. The odd components of G - A number |A| plus the deficiency.
VertexSet gallai_edmonds_a_set(const MultiGraph& g, const std::vector<char>& vertex_removed = {});

/// A perfect matching containing every edge of `include` and none of `exclude`.
std::optional<Matching> perfect_matching_with(const MultiGraph& g, const EdgeSet& include,
                                              const EdgeSet& exclude);

struct CoverageReport {
  bool matching_covered = false;
  EdgeSet uncovered;  // edges lying in no perfect matching
};

/// Matching covered = connected, has a perfect matching, and every edge lies in one.
CoverageReport is_matching_covered(const MultiGraph& g);

/// Edges that lie in at least one perfect matching (empty if there is none).
EdgeSet covered_edges(const MultiGraph& g);

/// The spanning subgraph on the covered edges. Throws InvalidArgument when g has no
/// perfect matching. Idempotent; may be disconnected.
EdgeMappedGraph matching_covered_core(const MultiGraph& g);

/// min over perfect matchings of |M ∩ C|.
int phi(const MultiGraph& g, const Cut& c);
/// max over perfect matchings of |M ∩ C|.
int max_crossing(const MultiGraph& g, const Cut& c);
bool is_tight_cut(const MultiGraph& g, const Cut& c);
bool is_separating_cut(const MultiGraph& g, const Cut& c);

class EnumerationOverflow : public std::runtime_error {
 public:
  explicit EnumerationOverflow(std::size_t cap);
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// All perfect matchings: branch on the lowest uncovered vertex, incident edges in
/// ascending id order. Throws EnumerationOverflow when more than `cap` exist.
std::vector<Matching> enumerate_perfect_matchings(const MultiGraph& g, std::size_t cap);

}  // namespace pml
