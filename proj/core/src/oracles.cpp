#include "knotthin/oracles.hpp"

#include <algorithm>
#include <vector>

#include "knotthin/errors.hpp"

namespace knotthin {

namespace {

// Fraction-free Gaussian elimination; exact determinant of an integer matrix.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (m[p][p] == 0) {
            int swap = -1;
            for (int r = p + 1; r < k; ++r)
                if (m[r][p] != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(m[p], m[swap]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j)
                m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            m[i][p] = 0;
        }
        prev = m[p][p];
    }
    return sign * m[k - 1][k - 1];
}

}  // namespace

BigInt spanning_tree_count(const Diagram& d) {
    if (d.n() == 0) return 1;
    const int nf = d.num_faces();

    // 2-color the faces; adjacent faces (sharing an edge) get opposite colors.
    std::vector<int> color(nf, -1);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(d.num_edges());
    for (int e = 1; e <= d.num_edges(); ++e) pairs.push_back(d.edge_sides(e));
    color[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto [f1, f2] : pairs) {
            int other = f1 == f ? f2 : (f2 == f ? f1 : -1);
            if (other >= 0 && color[other] < 0) {
                color[other] = 1 - color[f];
                stack.push_back(other);
            }
        }
    }
    for (auto [f1, f2] : pairs)
        if (color[f1] < 0 || color[f1] == color[f2])
            throw NonPlanarEmbedding("checkerboard coloring failed");

    std::vector<int> shaded_idx(nf, -1);
    int m = 0;
    for (int f = 0; f < nf; ++f)
        if (color[f] == 1) shaded_idx[f] = m++;
    if (m <= 1) return 1;

    // Tait graph: one edge per crossing joining its two shaded sectors.
    std::vector<std::vector<BigInt>> L(m, std::vector<BigInt>(m));
    for (int c = 0; c < d.n(); ++c) {
        int a = -1, b = -1;
        for (int p = 0; p < 4; ++p) {
            int f = d.face_of_sector(make_dart(c, p));
            if (color[f] == 1) (a < 0 ? a : b) = f;
        }
        int ia = shaded_idx[a], ib = shaded_idx[b];
        if (ia == ib) continue;  // self-loop: no effect on spanning trees
        L[ia][ia] += 1;
        L[ib][ib] += 1;
        L[ia][ib] -= 1;
        L[ib][ia] -= 1;
    }
    std::vector<std::vector<BigInt>> sub(m - 1, std::vector<BigInt>(m - 1));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) sub[i - 1][j - 1] = L[i][j];
    return bareiss_det(std::move(sub));
}

LaurentPoly fox_alexander(const Diagram& d) {
    const int n = d.n();
    LaurentPoly out;
    if (n == 0) {
        out.add(0, 1);
        return out;
    }
    // Wirtinger arcs: an arc ends where it passes under, i.e. after the edge
    // sitting at port 0 of some crossing.
    std::vector<int> breaks;
    for (auto& x : d.crossings()) breaks.push_back(x[0]);
    std::sort(breaks.begin(), breaks.end());
    auto arc_of = [&](int e) {
        int k = static_cast<int>(std::lower_bound(breaks.begin(), breaks.end(), e) - breaks.begin());
        return k % n;
    };

    struct Row {
        int sign, x, y, z;
    };
    std::vector<Row> rows;
    rows.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto& x = d.crossings()[i];
        rows.push_back(Row{d.sign(i), arc_of(x[0]), arc_of(x[2]), arc_of(x[1])});
    }

    // Evaluate the deleted Alexander matrix determinant at n integer points.
    auto det_at = [&](long long t) {
        const int m = n - 1;
        std::vector<std::vector<BigInt>> mat(m, std::vector<BigInt>(m));
        for (int i = 1; i < n; ++i) {
            auto [s, x, y, z] = rows[i];
            std::array<std::pair<int, long long>, 3> ent =
                s > 0 ? std::array<std::pair<int, long long>, 3>{{{z, 1 - t}, {x, t}, {y, -1}}}
                      : std::array<std::pair<int, long long>, 3>{{{z, t - 1}, {x, 1}, {y, -t}}};
            for (auto [col, val] : ent)
                if (col >= 1) mat[i - 1][col - 1] += val;
        }
        return bareiss_det(std::move(mat));
    };

    std::vector<long long> pts(n);
    std::vector<BigInt> vals(n);
    for (int i = 0; i < n; ++i) {
        pts[i] = 2 + i;
        vals[i] = det_at(pts[i]);
    }

    // Exact Lagrange interpolation; the result has integer coefficients.
    std::vector<BigRat> coeffs(n, BigRat(0));
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> num{1};  // product of (x - xj), low-to-high
        BigInt den = 1;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            num.insert(num.begin(), 0);
            for (size_t k = 0; k + 1 < num.size(); ++k) num[k] -= pts[j] * num[k + 1];
            den *= (pts[i] - pts[j]);
        }
        // boost::rational rejects negative denominators for this int type
        BigRat scale(den < 0 ? -vals[i] : vals[i], den < 0 ? -den : den);
        for (size_t k = 0; k < num.size(); ++k) coeffs[k] += scale * BigRat(num[k]);
    }
    for (int k = 0; k < n; ++k) {
        if (coeffs[k].denominator() != 1)
            throw NormalizationBug("Fox interpolation produced a non-integer coefficient");
        out.add(4 * k, coeffs[k].numerator());
    }
    return out;
}

BigInt pretzel_determinant(long long p, long long q, long long r) {
    int even = (p % 2 == 0) + (q % 2 == 0) + (r % 2 == 0);
    if (even >= 2) throw NotAKnot(even == 2 ? 2 : 3, "pretzel closure is a link");
    BigInt P = p, Q = q, R = r;
    BigInt det = P * Q + Q * R + R * P;
    return det < 0 ? -det : det;
}

}  // namespace knotthin
