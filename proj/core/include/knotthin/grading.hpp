#pragma once

#include <array>
#include <string>

#include "knotthin/diagram.hpp"

namespace knotthin {

// Local A/M contributions per (crossing sign, quadrant class), stored in
// quarter-integer units (value * 4) so every grading computation is exact
// integer arithmetic. delta = A - M and f = delta + sign/4 are derived.
struct GradingTable {
    // index [sign_idx][quadrant]: sign_idx 0 = positive crossing, 1 = negative
    std::array<std::array<int, 4>, 2> A_q{};
    std::array<std::array<int, 4>, 2> M_q{};

    static int sign_index(int sign) { return sign > 0 ? 0 : 1; }

    int A(int sign, Quadrant q) const { return A_q[sign_index(sign)][static_cast<int>(q)]; }
    int M(int sign, Quadrant q) const { return M_q[sign_index(sign)][static_cast<int>(q)]; }
    int delta(int sign, Quadrant q) const { return A(sign, q) - M(sign, q); }
    int f(int sign, Quadrant q) const { return delta(sign, q) + sign; }  // +-1 quarter units

    // Checks the structural constraints: M integer-valued, delta in {0,-1/2}
    // at positive and {0,+1/2} at negative crossings, f in {+-1/4}.
    // Throws InvalidTable.
    void validate() const;

    static GradingTable standard();
    // JSON data file: {"rows":[{"sign":+-1,"quadrant":"N|S|E|W","A":q4,"M":q4}, ...]}
    static GradingTable load_json(const std::string& path);

    bool operator==(const GradingTable&) const = default;
};

}  // namespace knotthin
