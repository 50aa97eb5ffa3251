#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "knotthin/badness.hpp"
#include "knotthin/errors.hpp"
#include "knotthin/oracles.hpp"
#include "knotthin/states.hpp"

using namespace knotthin;

namespace {

const GradingTable& table() {
    static GradingTable t = GradingTable::standard();
    return t;
}

MarkedDiagram bad_mark(const Diagram& d) {
    BadnessReport r = badness(d);
    return mark(d, select_bad_edge_marking(d, r).edge);
}

}  // namespace

TEST_CASE("unknot has one empty state") {
    Diagram d = Diagram::parse_pd("PD[]");
    MarkedDiagram md = mark(d, 0);
    int count = 0;
    for_each_state(md, [&](const State& s) {
        CHECK(s.empty());
        ++count;
    });
    CHECK(count == 1);
    ComplexSummary cs = summarize_complex(md, table());
    CHECK(cs.state_count == 1);
    CHECK(cs.spread_q == 0);
}

TEST_CASE("trefoil: 3 states, thin, Alexander 1 - t + t^2") {
    Diagram d = Diagram::parse_pd(testutil::kTrefoil);
    MarkedDiagram md = mark(d, 1);
    ComplexSummary cs = summarize_complex(md, table());
    CHECK(cs.state_count == 3);
    CHECK(cs.spread_q == 0);
    LaurentPoly sum = state_sum_alexander(md, table());
    CHECK(sum.canonical() == std::vector<BigInt>{1, -1, 1});
}

TEST_CASE("figure-eight: 5 states, Alexander 1 - 3t + t^2") {
    Diagram d = Diagram::parse_pd(testutil::kFigureEight);
    MarkedDiagram md = mark(d, 1);
    ComplexSummary cs = summarize_complex(md, table());
    CHECK(cs.state_count == 5);
    CHECK(cs.spread_q == 0);
    CHECK(state_sum_alexander(md, table()).canonical() == std::vector<BigInt>{1, -3, 1});
}

TEST_CASE("states are bijections onto unmarked domains") {
    Diagram d = build_pretzel({-3, 5, 5});
    MarkedDiagram md = bad_mark(d);
    for_each_state(md, [&](const State& s) {
        std::set<int> faces;
        for (Dart sector : s) {
            CHECK(d.face_of_sector(sector) != md.fa);
            CHECK(d.face_of_sector(sector) != md.fb);
            faces.insert(d.face_of_sector(sector));
        }
        CHECK(static_cast<int>(faces.size()) == d.n());
    });
}

TEST_CASE("P(-3,5,5) with bad-edge marking: 55 states, spread 1") {
    Diagram d = build_pretzel({-3, 5, 5});
    MarkedDiagram md = bad_mark(d);
    ComplexSummary cs = summarize_complex(md, table());
    CHECK(cs.state_count == 55);
    CHECK(cs.spread_q == 4);
    CHECK(state_sum_alexander(md, table()).same_up_to_unit(fox_alexander(d)));
}

TEST_CASE("state count is marking independent") {
    Diagram d = Diagram::parse_pd(testutil::kFigureEight);
    for (int e = 1; e <= d.num_edges(); ++e) {
        auto [fa, fb] = d.edge_sides(e);
        if (fa == fb) continue;
        CHECK(summarize_complex(mark(d, e), table()).state_count == 5);
    }
}

TEST_CASE("enumeration order is deterministic and lexicographic") {
    Diagram d = Diagram::parse_pd(testutil::kTrefoil);
    std::vector<State> first, second;
    for_each_state(mark(d, 1), [&](const State& s) { first.push_back(s); });
    for_each_state(mark(d, 1), [&](const State& s) { second.push_back(s); });
    CHECK(first == second);
    for (size_t i = 1; i < first.size(); ++i) CHECK(first[i - 1] < first[i]);
}

TEST_CASE("budget precheck throws before enumerating") {
    Diagram d = build_pretzel({-3, 5, 5});
    MarkedDiagram md = bad_mark(d);
    CHECK_THROWS_AS(summarize_complex(md, table(), BigInt(54)), EnumerationBudgetExceeded);
    try {
        summarize_complex(md, table(), BigInt(10));
    } catch (const EnumerationBudgetExceeded& e) {
        CHECK(e.count == "55");
    }
}

TEST_CASE("thickness report: alternating vs sharp non-alternating") {
    ThicknessReport tr = thickness_report(Diagram::parse_pd(testutil::kTrefoil), table());
    CHECK(tr.B == 0);
    CHECK(tr.alternating);
    CHECK(tr.bound_q == 0);
    CHECK(tr.spread_q == 0);
    CHECK(tr.certified);

    ThicknessReport pr = thickness_report(build_pretzel({-3, 5, 5}), table());
    CHECK(pr.B == 4);
    CHECK(!pr.fallback_marking);
    CHECK(pr.bound_q == 4);
    CHECK(pr.spread_q == 4);
    CHECK(pr.state_count == 55);
    CHECK(pr.certified);
}
