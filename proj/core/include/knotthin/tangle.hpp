#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "knotthin/diagram.hpp"

namespace knotthin {

// Tangle slopes are small rationals beta/alpha (alpha > 0 after reduction).
using Frac = boost::rational<long long>;

// Parses "b/a" or a bare integer; rejects zero and zero denominators.
Frac parse_fraction(const std::string& text);

// Continued-fraction layout of a rational tangle. Coefficients are stored
// innermost-first; odd (1-based) positions are horizontal twist boxes, even
// positions vertical ones. A leading 0 (plain form only) starts the layering
// from the infinity tangle. Vertical coefficients are stored with their sign
// flipped relative to the raw twist count, so a sign-alternating stored
// sequence is exactly an alternating diagram.
enum class CfForm {
    Plain,        // integer tangles stay single boxes; may carry a leading 0
    Alternating,  // no zeros, strictly alternating signs; alternating diagram
};

std::vector<long long> cf_expand(const Frac& r, CfForm form);

// Inverse of cf_expand under the stored convention (for round-trip checks).
Frac cf_eval(const std::vector<long long>& cf);

// Closes a cyclic row of rational tangles with the given slopes into a knot
// diagram. Throws NotAKnot (with the component count) when the closure is a
// link, and MalformedCode on empty or zero parameters.
Diagram build_montesinos(const std::vector<Frac>& params, CfForm form);

// Pretzel P(a1, .., ak) = Montesinos with slopes 1/ai, plain form (each
// parameter one vertical twist box).
Diagram build_pretzel(const std::vector<long long>& a);

// Stable reorder grouping negative slopes before positive ones, e.g.
// (-1/3, 1/5, -2/7, 1/5) -> (-1/3, -2/7, 1/5, 1/5).
std::vector<Frac> reorder_tangles(std::vector<Frac> params);

struct NormalizeResult {
    Diagram diagram;
    std::vector<Frac> params;  // all of the majority sign, plus at most one
                               // compensating integer tangle
};

// Rewrites the slope list so every tangle has the majority sign (adding full
// twists r -> r + 2k and one compensating integer tangle), then rebuilds in
// alternating form. The result has badness B <= 4 and the same knot type;
// throws NormalizationBug if the bound fails.
NormalizeResult normalize_montesinos(const std::vector<Frac>& params);

}  // namespace knotthin
