#pragma once

#include "pml/graph.hpp"

namespace pml::named {

MultiGraph cycle(int n);
MultiGraph complete(int n);
MultiGraph complete_bipartite(int a, int b);
/// Triangles {0,1,2}, {3,4,5}; edges 01,12,02,34,45,35 then rungs 03,14,25.
MultiGraph prism();
/// Outer cycle 0..k-1, inner cycle k..2k-1, rungs i -- k+i (rungs last).
MultiGraph circular_ladder(int k);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- 5+i (spokes last).
MultiGraph petersen();
/// Hub 0 joined to a rim cycle 1..k.
MultiGraph wheel(int k);
/// Returns g with an extra copy of edge e appended (new id = g.num_edges()).
MultiGraph with_parallel(const MultiGraph& g, EdgeId e);

}  // namespace pml::named
