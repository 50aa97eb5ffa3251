#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "knotthin/badness.hpp"
#include "knotthin/errors.hpp"
#include "knotthin/tangle.hpp"

using namespace knotthin;

TEST_CASE("alternating diagrams have B = 0 and no bad edge") {
    for (const char* pd : {testutil::kTrefoil, testutil::kFigureEight, testutil::kKink}) {
        Diagram d = Diagram::parse_pd(pd);
        BadnessReport r = badness(d);
        CHECK(r.B == 0);
        CHECK(r.alternating);
        CHECK(r.bad_domains.empty());
        CHECK_THROWS_AS(select_bad_edge_marking(d, r), NoBadEdge);
    }
}

TEST_CASE("P(-3,5,5) has exactly 4 bad domains") {
    Diagram d = build_pretzel({-3, 5, 5});
    CHECK(d.n() == 13);
    BadnessReport r = badness(d);
    CHECK(r.B == 4);
    CHECK(!r.alternating);
    CHECK(static_cast<int>(r.bad_domains.size()) == 4);
    CHECK(!r.candidates.empty());
    MarkingChoice mc = select_bad_edge_marking(d, r);
    CHECK(!mc.fallback);
    auto [fa, fb] = d.edge_sides(mc.edge);
    CHECK(fa != fb);
    // both sides of a candidate edge are bad domains
    for (int f : {fa, fb})
        CHECK(std::find(r.bad_domains.begin(), r.bad_domains.end(), f) != r.bad_domains.end());
}

TEST_CASE("mirror pretzel P(3,5,5) is alternating") {
    Diagram d = build_pretzel({3, 5, 5});
    CHECK(badness(d).B == 0);
}

TEST_CASE("witness edges fail to alternate and lie on the domain boundary") {
    Diagram d = build_pretzel({-3, 5, 5});
    BadnessReport r = badness(d);
    for (const DomainVerdict& dom : r.domains) {
        for (int e : dom.witnesses) {
            CHECK(!edge_alternating(d, e));
            auto [fa, fb] = d.edge_sides(e);
            CHECK((fa == dom.domain || fb == dom.domain));
        }
        CHECK(dom.bad == !dom.witnesses.empty());
    }
}
