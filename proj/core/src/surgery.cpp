#include "knotthin/surgery.hpp"

#include "knotthin/badness.hpp"
#include "knotthin/errors.hpp"

namespace knotthin {

namespace {

// Arrival (head) or exit (tail) classification of every dart.
bool is_head(const Diagram& d, Dart dart) {
    int p = dart_port(dart);
    if (p == 0) return true;
    if (p == 2) return false;
    return (p == 3) == (d.sign(dart_crossing(dart)) > 0);
}

// Rebuilds a PD code from a dart-mate involution (under strand on ports 0/2,
// over on 1/3 at every crossing). Returns the diagram plus the label of the
// edge leaving `track_tail`.
std::pair<Diagram, int> emit_pd(int n, const std::vector<Dart>& mate, Dart track_tail) {
    std::vector<Dart> arrivals{0};  // trace from crossing 0, port 0
    Dart cur = 0;
    int tracked = 0;
    std::vector<int> label(4 * n, 0);
    std::vector<char> arrived(4 * n, 0);
    while (true) {
        Dart out = make_dart(dart_crossing(cur), (dart_port(cur) + 2) % 4);
        cur = mate[out];
        if (cur == 0) break;
        arrivals.push_back(cur);
        if (static_cast<int>(arrivals.size()) > 2 * n)
            throw NotAKnot(0, "splice traversal does not close");
    }
    if (static_cast<int>(arrivals.size()) != 2 * n)
        throw NotAKnot(2, "splice produced a link");
    for (int i = 0; i < 2 * n; ++i) {
        Dart out = make_dart(dart_crossing(arrivals[i]), (dart_port(arrivals[i]) + 2) % 4);
        label[out] = i + 1;
        label[arrivals[(i + 1) % (2 * n)]] = i + 1;
        if (out == track_tail) tracked = i + 1;
        arrived[arrivals[i]] = 1;
    }
    std::vector<std::array<int, 4>> pd(n);
    for (int c = 0; c < n; ++c) {
        int k = arrived[make_dart(c, 0)] ? 0 : 2;
        for (int j = 0; j < 4; ++j) pd[c][j] = label[make_dart(c, (k + j) % 4)];
    }
    return {Diagram(std::move(pd)), tracked};
}

int auto_bad_edge(const Diagram& d) {
    BadnessReport r = badness(d);
    MarkingChoice mc = select_bad_edge_marking(d, r);
    return mc.edge;
}

}  // namespace

SumResult connected_sum(const Diagram& d1, int e1, const Diagram& d2, int e2) {
    if (d1.n() == 0 || d2.n() == 0)
        throw MalformedCode("connected sum requires diagrams with crossings");
    if (e1 < 1 || e1 > d1.num_edges() || e2 < 1 || e2 > d2.num_edges())
        throw MalformedCode("splice edge out of range");
    const int n1 = d1.n(), n2 = d2.n();
    std::vector<Dart> mate(4 * (n1 + n2), -1);
    for (int e = 1; e <= d1.num_edges(); ++e) {
        auto [a, b] = d1.edge_darts(e);
        mate[a] = b;
        mate[b] = a;
    }
    auto shift = [&](Dart d) { return make_dart(dart_crossing(d) + n1, dart_port(d)); };
    for (int e = 1; e <= d2.num_edges(); ++e) {
        auto [a, b] = d2.edge_darts(e);
        mate[shift(a)] = shift(b);
        mate[shift(b)] = shift(a);
    }

    auto [a1, b1] = d1.edge_darts(e1);
    Dart t1 = is_head(d1, a1) ? b1 : a1;
    Dart h1 = is_head(d1, a1) ? a1 : b1;
    auto [a2, b2] = d2.edge_darts(e2);
    Dart t2 = shift(is_head(d2, a2) ? b2 : a2);
    Dart h2 = shift(is_head(d2, a2) ? a2 : b2);

    // Cut both edges and reconnect tail-to-head across the factors.
    mate[t1] = h2;
    mate[h2] = t1;
    mate[t2] = h1;
    mate[h1] = t2;

    auto [diagram, lab] = emit_pd(n1 + n2, mate, t1);
    return SumResult{std::move(diagram), lab};
}

SumResult iterated_sum(const std::vector<SumPlan>& plan) {
    if (plan.size() < 2) throw MalformedCode("iterated sum needs at least two factors");
    auto edge_of = [](const SumPlan& p) {
        return p.edge != 0 ? p.edge : auto_bad_edge(*p.diagram);
    };
    SumResult acc =
        connected_sum(*plan[0].diagram, edge_of(plan[0]), *plan[1].diagram, edge_of(plan[1]));
    for (size_t i = 2; i < plan.size(); ++i)
        acc = connected_sum(acc.diagram, acc.splice_edge, *plan[i].diagram, edge_of(plan[i]));
    return acc;
}

}  // namespace knotthin
