#pragma once

#include <functional>
#include <map>
#include <vector>

#include "knotthin/badness.hpp"
#include "knotthin/diagram.hpp"
#include "knotthin/grading.hpp"
#include "knotthin/poly.hpp"
#include "knotthin/types.hpp"

namespace knotthin {

// A Kauffman state assigns to each crossing one of its four sectors such that
// the assigned sectors lie in pairwise-distinct domains, none of which is one
// of the two domains touching the marking. This is a bijection onto the
// unmarked domains. States are visited in lexicographic (crossing, port)
// order; the 0-crossing unknot has exactly one (empty) state.
using State = std::vector<Dart>;  // sector dart chosen at each crossing

void for_each_state(const MarkedDiagram& md, const std::function<void(const State&)>& fn);

struct StateGrades {
    int A_q = 0;      // Alexander grading, quarter units
    int M_q = 0;      // Maslov grading, quarter units
    int delta_q = 0;  // A - M
};

StateGrades grade_state(const Diagram& d, const GradingTable& t, const State& s);

struct ComplexSummary {
    BigInt state_count = 0;
    std::map<int, BigInt> delta_hist;  // quarter-unit grading -> count
    std::map<int, BigInt> A_hist;
    std::map<int, BigInt> M_hist;
    int spread_q = 0;  // max delta - min delta, quarter units (0 for <=1 value)
};

// Enumerates all states and their gradings. Before enumerating, the expected
// state count (spanning trees of the Tait graph) is compared against `budget`;
// EnumerationBudgetExceeded is thrown if it is larger. Verifies the pointwise
// identity delta = -writhe/4 + sum_c f(c) on every state.
ComplexSummary summarize_complex(const MarkedDiagram& md, const GradingTable& t,
                                 const BigInt& budget = BigInt(100000000));

// State sum sum_s (-1)^M(s) t^A(s); equals the Alexander polynomial up to a
// unit +- t^(k/2).
LaurentPoly state_sum_alexander(const MarkedDiagram& md, const GradingTable& t,
                                const BigInt& budget = BigInt(100000000));

struct ThicknessReport {
    int B = 0;
    bool alternating = false;
    int marking_edge = 0;
    bool fallback_marking = false;
    int bound_q = 0;           // certified upper bound on the delta spread
    bool spread_available = false;
    int spread_q = 0;          // actual spread when enumeration fit the budget
    bool certified = false;    // spread_available && spread_q <= bound_q
    BigInt state_count = 0;
    bool budget_exceeded = false;
    std::string budget_count;  // matrix-tree count when over budget
};

// Picks a bad-edge marking when one exists (bound 2B - 4 quarter units, i.e.
// B/2 - 1), otherwise any valid marking (bound 2B); alternating diagrams get
// bound 0. Enumerates within `budget` to report the realized spread.
ThicknessReport thickness_report(const Diagram& d, const GradingTable& t,
                                 const BigInt& budget = BigInt(100000000));

}  // namespace knotthin
