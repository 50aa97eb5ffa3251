// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. All randomness is seeded for reproducibility.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "knotthin/badness.hpp"
#include "knotthin/diagram.hpp"
#include "knotthin/errors.hpp"
#include "knotthin/grading.hpp"
#include "knotthin/oracles.hpp"
#include "knotthin/states.hpp"
#include "knotthin/surgery.hpp"
#include "knotthin/tangle.hpp"

using namespace knotthin;

namespace {

const GradingTable& table() {
    static GradingTable t = GradingTable::standard();
    return t;
}

int bad_candidate(const Diagram& d) {
    BadnessReport r = badness(d);
    return select_bad_edge_marking(d, r).edge;
}

int any_valid_edge(const Diagram& d, std::mt19937& rng) {
    std::vector<int> valid;
    for (int e = 1; e <= d.num_edges(); ++e) {
        auto [fa, fb] = d.edge_sides(e);
        if (fa != fb) valid.push_back(e);
    }
    return valid[std::uniform_int_distribution<size_t>(0, valid.size() - 1)(rng)];
}

std::map<int, BigInt> convolve(const std::map<int, BigInt>& a, const std::map<int, BigInt>& b) {
    std::map<int, BigInt> out;
    for (auto& [ka, va] : a)
        for (auto& [kb, vb] : b) out[ka + kb] += va * vb;
    return out;
}

// Pool of random non-alternating knot diagrams for criteria 6 and 7.
std::vector<Diagram> random_nonalternating(std::mt19937& rng, int count, int max_crossings) {
    std::vector<Diagram> out;
    while (static_cast<int>(out.size()) < count) {
        auto params = testutil::random_knot_spec(rng, 3, true);
        Diagram d = build_montesinos(params, CfForm::Plain);
        if (d.n() > max_crossings || badness(d).B == 0) continue;
        out.push_back(std::move(d));
    }
    return out;
}

struct Criterion {
    int id;
    std::function<std::string()> run;  // empty string = pass, else reason
};

std::string criterion1() {
    std::vector<Diagram> suite;
    suite.push_back(Diagram::parse_pd(testutil::kTrefoil));
    suite.push_back(Diagram::parse_pd(testutil::kFigureEight));
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> nt_dist(3, 4), a_dist(1, 3);
    // 10 same-sign pretzels (odd strand counts keep the closure a knot)
    while (suite.size() < 12) {
        std::vector<long long> a;
        int sgn = suite.size() % 2 ? 1 : -1;
        int nt = nt_dist(rng);
        for (int j = 0; j < nt; ++j) a.push_back(sgn * (2 * a_dist(rng) + 1));
        try {
            suite.push_back(build_pretzel(a));
        } catch (const NotAKnot&) {
        }
    }
    // 10 same-sign Montesinos diagrams in alternating form
    for (int i = 0; i < 10; ++i)
        suite.push_back(
            build_montesinos(testutil::random_knot_spec(rng, 3, false), CfForm::Alternating));

    for (size_t i = 0; i < suite.size(); ++i) {
        const Diagram& d = suite[i];
        BadnessReport b = badness(d);
        if (b.B != 0) return "diagram " + std::to_string(i) + " has B=" + std::to_string(b.B);
        ThicknessReport tr = thickness_report(d, table());
        if (tr.spread_q != 0)
            return "diagram " + std::to_string(i) + " spread=" + std::to_string(tr.spread_q);
    }
    return "";
}

std::string criterion2() {
    Diagram d = build_pretzel({-3, 5, 5});
    BadnessReport b = badness(d);
    if (b.B != 4) return "B=" + std::to_string(b.B);
    ComplexSummary cs = summarize_complex(mark(d, bad_candidate(d)), table());
    if (cs.state_count != 55) return "state count " + cs.state_count.str();
    if (cs.spread_q != 4) return "spread_q=" + std::to_string(cs.spread_q);
    return "";
}

std::string criterion3() {
    Diagram p = build_pretzel({-3, 5, 5});
    const BigInt expect_counts[3] = {55, 3025, 166375};
    Diagram cur = p;
    int marking = bad_candidate(p);
    for (int n = 1; n <= 3; ++n) {
        BadnessReport b = badness(cur);
        if (b.B != 2 * n + 2)
            return "K" + std::to_string(n) + " B=" + std::to_string(b.B);
        ComplexSummary cs = summarize_complex(mark(cur, marking), table());
        if (cs.state_count != expect_counts[n - 1])
            return "K" + std::to_string(n) + " states " + cs.state_count.str();
        if (cs.spread_q != 4 * n)
            return "K" + std::to_string(n) + " spread_q=" + std::to_string(cs.spread_q);
        if (n < 3) {
            SumResult s = connected_sum(cur, marking, p, bad_candidate(p));
            cur = s.diagram;
            marking = s.splice_edge;
        }
    }
    return "";
}

std::string criterion4() {
    std::mt19937 rng(404);
    for (int i = 0; i < 100; ++i) {
        auto params = testutil::random_knot_spec(rng, 5, true);
        Diagram base = build_montesinos(params, CfForm::Plain);
        NormalizeResult norm = normalize_montesinos(params);
        BadnessReport b = badness(norm.diagram);
        if (b.B > 4) return "spec " + std::to_string(i) + " B=" + std::to_string(b.B);
        ThicknessReport tr = thickness_report(norm.diagram, table());
        if (tr.bound_q > 4)
            return "spec " + std::to_string(i) + " bound_q=" + std::to_string(tr.bound_q);
        if (!tr.certified) return "spec " + std::to_string(i) + " not certified";
        if (!fox_alexander(base).same_up_to_unit(fox_alexander(norm.diagram)))
            return "spec " + std::to_string(i) + " Alexander changed";
    }
    return "";
}

std::string criterion5() {
    std::mt19937 rng(505);
    struct Entry {
        Diagram d;
        bool is_pretzel = false;
        std::array<long long, 3> pqr{};
    };
    std::vector<Entry> suite;
    suite.push_back({Diagram::parse_pd(testutil::kTrefoil)});
    suite.push_back({Diagram::parse_pd(testutil::kFigureEight)});
    suite.push_back({Diagram::parse_pd(testutil::kKink)});
    suite.push_back({build_pretzel({3, 3, 3}), true, {3, 3, 3}});
    suite.push_back({build_pretzel({-2, 3, 3}), true, {-2, 3, 3}});
    suite.push_back({build_pretzel({-2, 3, 5}), true, {-2, 3, 5}});
    suite.push_back({build_montesinos({Frac(2, 5), Frac(1, 3)}, CfForm::Alternating)});
    suite.push_back({build_montesinos({Frac(-2, 5), Frac(1, 3)}, CfForm::Plain)});

    for (size_t i = 0; i < suite.size(); ++i) {
        const Diagram& d = suite[i].d;
        if (d.n() > 12) return "suite diagram " + std::to_string(i) + " too large";
        BigInt trees = spanning_tree_count(d);
        LaurentPoly fox = fox_alexander(d);
        std::vector<int> markings;
        for (int e = 1; e <= d.num_edges() && static_cast<int>(markings.size()) < 3; ++e) {
            auto [fa, fb] = d.edge_sides(e);
            if (fa != fb) markings.push_back(e);
        }
        for (int e : markings) {
            MarkedDiagram md = mark(d, e);
            ComplexSummary cs = summarize_complex(md, table());
            if (cs.state_count != trees)
                return "diagram " + std::to_string(i) + ": states != trees";
            LaurentPoly sum = state_sum_alexander(md, table());
            if (!sum.same_up_to_unit(fox))
                return "diagram " + std::to_string(i) + ": state sum != Fox";
            BigInt at1 = sum.eval_int(1);
            if (at1 != 1 && at1 != -1)
                return "diagram " + std::to_string(i) + ": Delta(1) != +-1";
            if (!sum.symmetric())
                return "diagram " + std::to_string(i) + ": Delta not symmetric";
        }
        if (suite[i].is_pretzel) {
            auto [p, q, r] = suite[i].pqr;
            BigInt at = fox.eval_int(-1);
            if (at < 0) at = -at;
            if (at != pretzel_determinant(p, q, r))
                return "diagram " + std::to_string(i) + ": determinant mismatch";
        }
    }
    return "";
}

std::string criterion6() {
    std::mt19937 rng(606);
    std::vector<Diagram> pool = random_nonalternating(rng, 160, 14);
    // include some connected sums of small non-alternating factors
    std::vector<Diagram> small = random_nonalternating(rng, 20, 7);
    for (size_t i = 0; i + 1 < small.size(); i += 2) {
        Diagram& a = small[i];
        Diagram& b = small[i + 1];
        pool.push_back(connected_sum(a, bad_candidate(a), b, bad_candidate(b)).diagram);
    }
    while (static_cast<int>(pool.size()) < 200) pool.push_back(pool[pool.size() % 10]);

    for (size_t i = 0; i < pool.size(); ++i) {
        const Diagram& d = pool[i];
        const int wr = d.writhe();
        BadnessReport b = badness(d);
        if (b.B == 0) return "diagram " + std::to_string(i) + " unexpectedly alternating";

        MarkingChoice mc = select_bad_edge_marking(d, b);
        int bound_q = mc.fallback ? 2 * b.B : 2 * b.B - 4;
        ComplexSummary cs = summarize_complex(mark(d, mc.edge), table());
        if (cs.spread_q > bound_q)
            return "diagram " + std::to_string(i) + " violates the bad-edge bound";

        ComplexSummary cr = summarize_complex(mark(d, any_valid_edge(d, rng)), table());
        if (cr.spread_q > 2 * b.B)
            return "diagram " + std::to_string(i) + " violates the generic bound";

        // per-state identity delta = -wr/4 + sum f
        std::string failure;
        for_each_state(mark(d, mc.edge), [&](const State& s) {
            StateGrades g = grade_state(d, table(), s);
            int fsum = 0;
            for (Dart sec : s) fsum += table().f(d.sign(dart_crossing(sec)), d.quadrant(sec));
            if (g.delta_q != -wr + fsum) failure = "per-state identity";
        });
        if (!failure.empty()) return "diagram " + std::to_string(i) + ": " + failure;

        // f is constant over the corners of every good domain
        for (const DomainVerdict& dom : b.domains) {
            if (dom.bad) continue;
            int expect = 0;
            bool first = true;
            for (Dart sec : d.faces()[dom.domain]) {
                int f = table().f(d.sign(dart_crossing(sec)), d.quadrant(sec));
                if (first) {
                    expect = f;
                    first = false;
                } else if (f != expect) {
                    return "diagram " + std::to_string(i) + ": f not constant on good domain";
                }
            }
        }
    }
    return "";
}

std::string criterion7() {
    std::mt19937 rng(707);
    std::vector<Diagram> pool = random_nonalternating(rng, 30, 10);
    int done = 0;
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    while (done < 50) {
        const Diagram& a = pool[pick(rng)];
        const Diagram& b = pool[pick(rng)];
        BigInt product = spanning_tree_count(a) * spanning_tree_count(b);
        if (product > 200000) continue;
        int ea = bad_candidate(a), eb = bad_candidate(b);
        SumResult s = connected_sum(a, ea, b, eb);
        int Bsum = badness(s.diagram).B;
        if (Bsum != badness(a).B + badness(b).B - 2)
            return "pair " + std::to_string(done) + ": B additivity fails";
        auto ha = summarize_complex(mark(a, ea), table()).delta_hist;
        auto hb = summarize_complex(mark(b, eb), table()).delta_hist;
        auto hs = summarize_complex(mark(s.diagram, s.splice_edge), table()).delta_hist;
        if (hs != convolve(ha, hb))
            return "pair " + std::to_string(done) + ": histogram convolution fails";
        ++done;
    }
    return "";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7},
    };
    bool all_ok = true;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.run();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (reason.empty()) {
            std::cout << "criterion " << c.id << ": PASS (" << ms << " ms)\n";
        } else {
            std::cout << "criterion " << c.id << ": FAIL (" << reason << ")\n";
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}
