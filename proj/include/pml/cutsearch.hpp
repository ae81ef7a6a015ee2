#pragma once

// From a fractional vertex of the relaxation of a non-BvN brick, find an odd cut that is
// separating, defines a facet of PM(G), and has no Petersen brick on either side.

#include <optional>
#include <string>
#include <vector>

#include "pml/bvnalg.hpp"
#include "pml/graph.hpp"
#include "pml/rational.hpp"

namespace pml {

struct RobustCut {
  Cut cut;
  ContractionResult shore_shrunk;       // G / shore
  ContractionResult complement_shrunk;  // G / (V - shore)
  Matching triple_matching;             // crosses the cut exactly three times
  Rational value;                       // x*(cut) for the originating certificate
  std::vector<Cut> history;             // every cut the search passed through
};

/// Carries the cut history of a failed search.
class CutSearchFailure : public InvariantViolation {
 public:
  CutSearchFailure(const std::string& what, std::vector<Cut> history);
  const std::vector<Cut>& history() const { return history_; }

 private:
  std::vector<Cut> history_;
};

Rational cut_value(const RationalVector& x, const Cut& c);

/// max over edges e of the fewest crossings of c among perfect matchings through e.
/// Equals 1 exactly when c is separating.
int separation_defect(const MultiGraph& g, const Cut& c);

/// delta(vertices of the first odd cycle); x*(C) = 0 is asserted.
Cut initial_cut(const MultiGraph& g, const FractionalCertificate& cert);

/// Barrier refinement until both contractions are matching covered. When x is given the
/// replacement keeps x(C) < 1.
Cut make_separating(const MultiGraph& g, const Cut& c, const RationalVector* x = nullptr,
                    std::vector<Cut>* history = nullptr);

/// Replaces a separating cut by cuts with strictly larger faces until both contractions
/// have exactly one brick.
Cut make_facet_defining(const MultiGraph& g, const Cut& c, const RationalVector* x = nullptr,
                        std::vector<Cut>* history = nullptr);

/// First perfect matching (by ascending 3-subsets of the cut) meeting c in exactly three
/// edges.
std::optional<Matching> matching_triple(const MultiGraph& g, const Cut& c);

/// Side of c (as a shore to shrink) whose contraction has a Petersen brick, if any.
std::optional<VertexSet> petersen_side(const MultiGraph& g, const Cut& c);

/// Moves four vertices of the Petersen side across c so that side becomes a 5-wheel.
/// The Petersen side is first reduced to Petersen up to multiplicities by equivalent
/// barrier / 2-separation cuts.
Cut shift_off_petersen(const MultiGraph& g, const Cut& c, const RationalVector* x = nullptr,
                       std::vector<Cut>* history = nullptr);

/// Full pipeline; g must be a brick other than Petersen.
RobustCut robust_cut(const MultiGraph& g, const FractionalCertificate& cert);

}  // namespace pml
