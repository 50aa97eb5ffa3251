#pragma once

#include <vector>

#include "knotthin/diagram.hpp"

namespace knotthin {

struct SumResult {
    Diagram diagram;
    // One of the two edges created by the splice, in the labels of the result.
    // When both inputs were cut at non-alternating edges with distinct sides,
    // this edge is a valid bad-edge marking for the sum.
    int splice_edge;
};

// Connected sum of two knot diagrams, joining them along the edges e1 and e2:
// both edges are cut and the loose ends reconnected respecting orientation.
// Faces, badness and the Kauffman complex of the factors compose under this
// operation (B adds, the delta histogram convolves).
SumResult connected_sum(const Diagram& d1, int e1, const Diagram& d2, int e2);

struct SumPlan {
    const Diagram* diagram;
    int edge;  // 0: pick the lowest bad-edge candidate automatically
};

// Left fold of connected sums; each step splices at the requested edge of the
// next factor and at the splice edge produced by the previous step (or the
// first factor's requested edge initially). With edge = 0 a bad-edge
// candidate is selected per factor (NoBadEdge if none exists).
SumResult iterated_sum(const std::vector<SumPlan>& plan);

}  // namespace knotthin
