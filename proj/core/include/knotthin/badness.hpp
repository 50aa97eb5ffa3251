#pragma once

#include <vector>

#include "knotthin/diagram.hpp"

namespace knotthin {

struct DomainVerdict {
    int domain = 0;
    bool bad = false;
    std::vector<int> witnesses;  // non-alternating boundary edges, sorted
};

struct BadnessReport {
    int B = 0;
    bool alternating = true;
    std::vector<DomainVerdict> domains;  // one per face, in face order
    std::vector<int> bad_domains;        // face ids with bad verdicts
    // Non-alternating edges whose two sides are distinct bad domains; these
    // are the markings that give the B/2 - 1 bound.
    std::vector<int> candidates;
};

// True iff the edge's two passages differ (one over, one under).
bool edge_alternating(const Diagram& d, int label);

std::vector<int> nonalternating_edges(const Diagram& d);

BadnessReport badness(const Diagram& d);

struct MarkingChoice {
    int edge = 0;
    bool fallback = false;  // true: no bad-edge candidate existed, weaker bound B/2
};

// Lowest bad-edge candidate; FallbackMarking (flagged) when all non-alternating
// edges have coincident sides. Throws NoBadEdge on alternating diagrams.
MarkingChoice select_bad_edge_marking(const Diagram& d, const BadnessReport& r);

}  // namespace knotthin
