#include "knotthin/poly.hpp"

#include <algorithm>
#include <sstream>

#include "knotthin/errors.hpp"

namespace knotthin {

void LaurentPoly::add(int exp_q, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp_q);
    if (it == terms_.end()) {
        terms_.emplace(exp_q, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<BigInt> LaurentPoly::canonical() const {
    if (terms_.empty()) return {};
    int lo = terms_.begin()->first;
    int hi = terms_.rbegin()->first;
    for (auto& [e, c] : terms_)
        if ((e - lo) % 4 != 0)
            throw InvalidTable("exponent lattice is finer than step 4: " + std::to_string(e) +
                               " vs " + std::to_string(lo));
    std::vector<BigInt> out((hi - lo) / 4 + 1);
    for (auto& [e, c] : terms_) out[(e - lo) / 4] = c;
    if (out.front() < 0)
        for (auto& c : out) c = -c;
    return out;
}

bool LaurentPoly::same_up_to_unit(const LaurentPoly& other) const {
    auto a = canonical();
    auto b = other.canonical();
    if (a == b) return true;
    std::reverse(b.begin(), b.end());
    if (!b.empty() && b.front() < 0)
        for (auto& c : b) c = -c;
    return a == b;
}

bool LaurentPoly::symmetric() const {
    auto a = canonical();
    auto b = a;
    std::reverse(b.begin(), b.end());
    if (!b.empty() && b.front() < 0)
        for (auto& c : b) c = -c;
    return a == b;
}

BigInt LaurentPoly::eval_int(long long t) const {
    auto c = canonical();
    BigInt acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string LaurentPoly::pretty() const {
    auto c = canonical();
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        BigInt v = c[k];
        if (first) {
            if (v < 0) {
                out << "-";
                v = -v;
            }
        } else {
            out << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        if (k == 0 || v != 1) {
            out << v.str();
            if (k > 0) out << "*";
        }
        if (k == 1)
            out << "t";
        else if (k > 1)
            out << "t^" << k;
        first = false;
    }
    return out.str();
}

}  // namespace knotthin
