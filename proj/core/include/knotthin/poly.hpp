#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotthin/types.hpp"

namespace knotthin {

// Laurent polynomial in t with exponents in quarter-integer units (stored
// exponent = 4 * actual). Alexander polynomials of knots live on a step-4
// (integer-exponent) lattice, possibly shifted by a half-integer unit.
class LaurentPoly {
public:
    LaurentPoly() = default;

    void add(int exp_q, const BigInt& coeff);
    bool zero() const { return terms_.empty(); }
    const std::map<int, BigInt>& terms() const { return terms_; }

    // Dense coefficient vector from lowest to highest exponent in step-4
    // strides, shifted to start at exponent 0 and sign-normalized so the
    // lowest nonzero coefficient is positive. Zero polynomial -> empty.
    std::vector<BigInt> canonical() const;

    // Equal up to multiplication by +- t^(k/2), optionally also t -> 1/t.
    bool same_up_to_unit(const LaurentPoly& other) const;

    // Palindromic canonical form (Delta(t) ~ Delta(1/t)).
    bool symmetric() const;

    // Evaluate at an integer argument; requires all exponents to share one
    // residue mod 4, evaluates the integer-exponent part and ignores the
    // overall half-integer unit (so eval(-1) gives +-determinant).
    BigInt eval_int(long long t) const;

    // e.g. "1 - 3*t + t^2" after canonicalization (integer powers).
    std::string pretty() const;

    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, BigInt> terms_;  // quarter-exponent -> coefficient, no zeros
};

}  // namespace knotthin
