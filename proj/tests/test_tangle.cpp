#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "knotthin/badness.hpp"
#include "knotthin/errors.hpp"
#include "knotthin/oracles.hpp"
#include "knotthin/tangle.hpp"

using namespace knotthin;

TEST_CASE("fraction parsing") {
    CHECK(parse_fraction("1/3") == Frac(1, 3));
    CHECK(parse_fraction("-2/7") == Frac(-2, 7));
    CHECK(parse_fraction("5") == Frac(5));
    CHECK(parse_fraction("4/6") == Frac(2, 3));
    CHECK_THROWS_AS(parse_fraction("1/0"), MalformedCode);
    CHECK_THROWS_AS(parse_fraction("0"), MalformedCode);
    CHECK_THROWS_AS(parse_fraction("abc"), MalformedCode);
}

TEST_CASE("continued-fraction expansions of reference slopes") {
    using V = std::vector<long long>;
    CHECK(cf_expand(Frac(5), CfForm::Plain) == V{5});
    CHECK(cf_expand(Frac(5), CfForm::Alternating) == V{5});
    CHECK(cf_expand(Frac(1, 5), CfForm::Plain) == V{0, -5});
    CHECK(cf_expand(Frac(-1, 3), CfForm::Plain) == V{0, 3});
    CHECK(cf_expand(Frac(5, 2), CfForm::Plain) == V{0, -2, 2});
    CHECK(cf_expand(Frac(1, 3), CfForm::Alternating) == V{1, -2});
    CHECK(cf_expand(Frac(5, 2), CfForm::Alternating) == V{1, -1, 2});
    CHECK(cf_expand(Frac(-3, 5), CfForm::Alternating) == V{-1, 1, -1, 1});
    CHECK(cf_expand(Frac(1, 8), CfForm::Alternating) == V{1, -7});
}

TEST_CASE("expansions evaluate back to the slope and preserve twist count") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int i = 0; i < 500; ++i) {
        int b = num(rng), a = den(rng);
        if (b == 0) continue;
        Frac r(b, a);
        for (CfForm form : {CfForm::Plain, CfForm::Alternating}) {
            auto cf = cf_expand(r, form);
            CHECK(cf_eval(cf) == r);
            long long twists_plain = 0, twists = 0;
            for (long long c : cf_expand(r, CfForm::Plain)) twists_plain += std::llabs(c);
            for (long long c : cf) twists += std::llabs(c);
            CHECK(twists == twists_plain);
        }
        auto alt = cf_expand(r, CfForm::Alternating);
        for (size_t j = 0; j + 1 < alt.size(); ++j) CHECK((alt[j] > 0) != (alt[j + 1] > 0));
    }
}

TEST_CASE("M(3) is the trefoil") {
    Diagram d = build_montesinos({Frac(3)}, CfForm::Plain);
    CHECK(d.n() == 3);
    CHECK(badness(d).B == 0);
    CHECK(fox_alexander(d).canonical() == std::vector<BigInt>{1, -1, 1});
}

TEST_CASE("M(1/8) closes to an unknot diagram") {
    Diagram d = build_montesinos({Frac(1, 8)}, CfForm::Plain);
    CHECK(fox_alexander(d).canonical() == std::vector<BigInt>{1});
}

TEST_CASE("plain and alternating builds give the same knot") {
    std::mt19937 rng(11);
    for (int i = 0; i < 10; ++i) {
        auto params = testutil::random_knot_spec(rng, 3, true);
        Diagram plain = build_montesinos(params, CfForm::Plain);
        Diagram alt = build_montesinos(params, CfForm::Alternating);
        CHECK(fox_alexander(plain).same_up_to_unit(fox_alexander(alt)));
    }
}

TEST_CASE("sign-coherent alternating builds are alternating diagrams") {
    std::mt19937 rng(12);
    for (int i = 0; i < 10; ++i) {
        auto params = testutil::random_knot_spec(rng, 3, false);
        CHECK(badness(build_montesinos(params, CfForm::Alternating)).B == 0);
    }
}

TEST_CASE("pretzel builder") {
    Diagram d = build_pretzel({-3, 5, 5});
    CHECK(d.n() == 13);
    CHECK(badness(d).B == 4);
    CHECK(spanning_tree_count(d) == 55);
    CHECK_THROWS_AS(build_pretzel({2, 4, 5}), NotAKnot);
    CHECK_THROWS_AS(build_montesinos({Frac(1, 2), Frac(1, 2)}, CfForm::Plain), NotAKnot);
    try {
        build_pretzel({2, 4, 5});
    } catch (const NotAKnot& e) {
        CHECK(e.components == 2);
    }
}

TEST_CASE("reorder groups negatives first, stably") {
    std::vector<Frac> in{Frac(-1, 3), Frac(1, 5), Frac(-2, 7), Frac(1, 5)};
    std::vector<Frac> want{Frac(-1, 3), Frac(-2, 7), Frac(1, 5), Frac(1, 5)};
    CHECK(reorder_tangles(in) == want);
}

TEST_CASE("normalization reaches B <= 4 and preserves the knot") {
    NormalizeResult res = normalize_montesinos({Frac(-1, 3), Frac(1, 5), Frac(1, 5)});
    CHECK(badness(res.diagram).B <= 4);
    Diagram base = build_pretzel({-3, 5, 5});
    CHECK(fox_alexander(base).same_up_to_unit(fox_alexander(res.diagram)));
    // original slots now share the majority sign; at most one extra integer box
    REQUIRE(res.params.size() <= 4);
    for (size_t i = 0; i < 3; ++i) CHECK(res.params[i].numerator() > 0);
}
