#include "knotthin/badness.hpp"

#include <algorithm>
#include <set>

#include "knotthin/errors.hpp"

namespace knotthin {

bool edge_alternating(const Diagram& d, int label) {
    auto [d1, d2] = d.edge_darts(label);
    return Diagram::passage(d1) != Diagram::passage(d2);
}

std::vector<int> nonalternating_edges(const Diagram& d) {
    std::vector<int> out;
    for (int e = 1; e <= d.num_edges(); ++e)
        if (!edge_alternating(d, e)) out.push_back(e);
    return out;
}

BadnessReport badness(const Diagram& d) {
    BadnessReport r;
    r.domains.resize(d.n() == 0 ? 2 : d.num_faces());
    for (size_t f = 0; f < r.domains.size(); ++f) r.domains[f].domain = static_cast<int>(f);

    for (int e : nonalternating_edges(d)) {
        auto [fa, fb] = d.edge_sides(e);
        // an edge repeated on one domain's boundary is still one witness
        r.domains[fa].witnesses.push_back(e);
        if (fb != fa) r.domains[fb].witnesses.push_back(e);
        if (fa != fb) r.candidates.push_back(e);
    }
    for (auto& dom : r.domains) {
        std::sort(dom.witnesses.begin(), dom.witnesses.end());
        dom.witnesses.erase(std::unique(dom.witnesses.begin(), dom.witnesses.end()),
                            dom.witnesses.end());
        dom.bad = !dom.witnesses.empty();
        if (dom.bad) {
            ++r.B;
            r.bad_domains.push_back(dom.domain);
        }
    }
    std::sort(r.candidates.begin(), r.candidates.end());
    r.candidates.erase(std::unique(r.candidates.begin(), r.candidates.end()), r.candidates.end());
    r.alternating = (r.B == 0);
    return r;
}

MarkingChoice select_bad_edge_marking(const Diagram& d, const BadnessReport& r) {
    if (r.alternating) throw NoBadEdge("diagram is alternating");
    if (!r.candidates.empty()) return MarkingChoice{r.candidates.front(), false};
    // every non-alternating edge is nugatory-adjacent; fall back to any valid
    // marking (bound weakens to B/2)
    for (int e = 1; e <= d.num_edges(); ++e) {
        auto [fa, fb] = d.edge_sides(e);
        if (fa != fb) return MarkingChoice{e, true};
    }
    throw AmbiguousMarking("no edge with distinct side domains");
}

}  // namespace knotthin
