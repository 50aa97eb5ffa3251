#include "knotthin/states.hpp"

#include <algorithm>

#include "knotthin/errors.hpp"
#include "knotthin/oracles.hpp"

namespace knotthin {

void for_each_state(const MarkedDiagram& md, const std::function<void(const State&)>& fn) {
    const Diagram& d = *md.d;
    const int n = d.n();
    if (n == 0) {
        fn(State{});
        return;
    }
    std::vector<char> used(d.num_faces(), 0);
    used[md.fa] = 1;
    used[md.fb] = 1;
    State state(n);

    // Iterative backtracker over (crossing, port) in lexicographic order.
    std::vector<int> port(n, -1);
    int c = 0;
    while (c >= 0) {
        if (c == n) {
            for (int i = 0; i < n; ++i) state[i] = make_dart(i, port[i]);
            fn(state);
            --c;
            continue;
        }
        if (port[c] >= 0) used[d.face_of_sector(make_dart(c, port[c]))] = 0;
        int p = port[c] + 1;
        while (p < 4 && used[d.face_of_sector(make_dart(c, p))]) ++p;
        if (p == 4) {
            port[c] = -1;
            --c;
            continue;
        }
        port[c] = p;
        used[d.face_of_sector(make_dart(c, p))] = 1;
        ++c;
    }
}

StateGrades grade_state(const Diagram& d, const GradingTable& t, const State& s) {
    StateGrades g;
    for (Dart sector : s) {
        int c = dart_crossing(sector);
        Quadrant q = d.quadrant(sector);
        g.A_q += t.A(d.sign(c), q);
        g.M_q += t.M(d.sign(c), q);
    }
    g.delta_q = g.A_q - g.M_q;
    return g;
}

namespace {

void check_budget(const Diagram& d, const BigInt& budget) {
    BigInt count = spanning_tree_count(d);
    if (count > budget)
        throw EnumerationBudgetExceeded(count.str(), budget.str());
}

}  // namespace

ComplexSummary summarize_complex(const MarkedDiagram& md, const GradingTable& t,
                                 const BigInt& budget) {
    const Diagram& d = *md.d;
    check_budget(d, budget);
    const int wr = d.writhe();
    ComplexSummary cs;
    for_each_state(md, [&](const State& s) {
        StateGrades g = grade_state(d, t, s);
        int f_sum = 0;
        for (Dart sector : s) {
            int c = dart_crossing(sector);
            f_sum += t.f(d.sign(c), d.quadrant(sector));
        }
        if (g.delta_q != -wr + f_sum)
            throw InvalidTable("grading table violates the delta identity");
        cs.state_count += 1;
        cs.delta_hist[g.delta_q] += 1;
        cs.A_hist[g.A_q] += 1;
        cs.M_hist[g.M_q] += 1;
    });
    if (!cs.delta_hist.empty())
        cs.spread_q = cs.delta_hist.rbegin()->first - cs.delta_hist.begin()->first;
    return cs;
}

LaurentPoly state_sum_alexander(const MarkedDiagram& md, const GradingTable& t,
                                const BigInt& budget) {
    const Diagram& d = *md.d;
    check_budget(d, budget);
    LaurentPoly poly;
    for_each_state(md, [&](const State& s) {
        StateGrades g = grade_state(d, t, s);
        poly.add(g.A_q, (g.M_q / 4) % 2 == 0 ? 1 : -1);
    });
    return poly;
}

ThicknessReport thickness_report(const Diagram& d, const GradingTable& t,
                                 const BigInt& budget) {
    ThicknessReport r;
    BadnessReport b = badness(d);
    r.B = b.B;
    r.alternating = b.alternating;

    MarkedDiagram md{&d, 0, -1, -1};
    if (d.n() == 0) {
        md = mark(d, 0);
        r.bound_q = 0;
    } else if (b.alternating) {
        // any valid marking; spread is 0 regardless
        for (int e = 1; e <= d.num_edges(); ++e) {
            auto [fa, fb] = d.edge_sides(e);
            if (fa != fb) {
                md = mark(d, e);
                break;
            }
        }
        if (!md.d || md.edge == 0) throw AmbiguousMarking("no edge with distinct side domains");
        r.bound_q = 0;
    } else {
        MarkingChoice mc = select_bad_edge_marking(d, b);
        md = mark(d, mc.edge);
        r.fallback_marking = mc.fallback;
        r.bound_q = mc.fallback ? 2 * b.B : 2 * b.B - 4;
    }
    r.marking_edge = md.edge;

    try {
        ComplexSummary cs = summarize_complex(md, t, budget);
        r.state_count = cs.state_count;
        r.spread_q = cs.spread_q;
        r.spread_available = true;
        r.certified = cs.spread_q <= r.bound_q;
    } catch (const EnumerationBudgetExceeded& e) {
        r.budget_exceeded = true;
        r.budget_count = e.count;
    }
    return r;
}

}  // namespace knotthin
