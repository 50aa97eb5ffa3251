#pragma once

#include "knotthin/diagram.hpp"
#include "knotthin/poly.hpp"
#include "knotthin/types.hpp"

namespace knotthin {

// Number of spanning trees of the Tait (checkerboard) graph, computed by the
// matrix-tree theorem with an exact Bareiss determinant. This equals the
// Kauffman state count for any marking. Returns 1 for the 0-crossing unknot.
BigInt spanning_tree_count(const Diagram& d);

// Alexander polynomial from the Wirtinger presentation via Fox calculus:
// exact integer evaluation at t = 2..n+1 (Bareiss) plus rational Lagrange
// interpolation. Defined up to +- t^k; returned with step-4 quarter
// exponents and canonical orientation.
LaurentPoly fox_alexander(const Diagram& d);

// |pq + qr + rp| for the pretzel knot P(p, q, r). Throws NotAKnot when two
// or more parameters are even (the closure then has several components).
BigInt pretzel_determinant(long long p, long long q, long long r);

}  // namespace knotthin
