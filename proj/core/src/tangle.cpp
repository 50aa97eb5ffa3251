#include "knotthin/tangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

#include "knotthin/badness.hpp"
#include "knotthin/errors.hpp"

namespace knotthin {

namespace {

// Geometric ports of a crossing box, counterclockwise.
constexpr int kNW = 0, kSW = 1, kSE = 2, kNE = 3;

// Handedness: a positive horizontal twist puts the NW-SE diagonal on top, a
// positive vertical twist the SW-NE diagonal (fixed by the determinant and
// Alexander oracles on pretzel closures).
constexpr bool kEastPosOverD02 = true;
constexpr bool kSouthPosOverD02 = false;

struct Att {
    bool is_port = false;
    int a = 0;  // crossing or plug id
    int p = 0;  // port (when is_port)
};

// Incremental plumbing of crossing boxes: wires connect crossing ports and
// open plugs; splicing merges wires until only port-port wires remain.
class Builder {
public:
    std::vector<bool> over_d02;  // per crossing: is NW-SE the over diagonal?
    int closed_loops = 0;

    int new_plug_wire(Att att) {
        int pid = next_plug_++;
        int w = static_cast<int>(wires_.size());
        wires_.push_back(std::array<Att, 2>{att, Att{false, pid, 0}});
        plugs_[pid] = {w, 1};
        return pid;
    }

    std::pair<int, std::array<int, 4>> new_crossing(bool d02) {
        int c = static_cast<int>(over_d02.size());
        over_d02.push_back(d02);
        std::array<int, 4> pl{};
        for (int p = 0; p < 4; ++p) pl[p] = new_plug_wire(Att{true, c, p});
        return {c, pl};
    }

    std::pair<int, int> strand() {
        int p1 = next_plug_++, p2 = next_plug_++;
        int w = static_cast<int>(wires_.size());
        wires_.push_back(std::array<Att, 2>{Att{false, p1, 0}, Att{false, p2, 0}});
        plugs_[p1] = {w, 0};
        plugs_[p2] = {w, 1};
        return {p1, p2};
    }

    void splice(int plug1, int plug2) {
        auto [w1, e1] = plugs_.at(plug1);
        auto [w2, e2] = plugs_.at(plug2);
        plugs_.erase(plug1);
        plugs_.erase(plug2);
        if (w1 == w2) {
            wires_[w1].reset();  // crossingless closed loop
            ++closed_loops;
            return;
        }
        Att a = (*wires_[w1])[1 - e1];
        Att b = (*wires_[w2])[1 - e2];
        wires_[w2].reset();
        wires_[w1] = std::array<Att, 2>{a, b};
        for (int i = 0; i < 2; ++i) {
            const Att& att = (*wires_[w1])[i];
            if (!att.is_port) plugs_[att.a] = {w1, i};
        }
    }

    // Turns the fully spliced plumbing into a PD diagram; the closure must be
    // a single component or NotAKnot is thrown with the component count.
    Diagram finalize() {
        if (!plugs_.empty()) throw MalformedCode("tangle closure left open plugs");
        const int n = static_cast<int>(over_d02.size());
        if (n == 0) throw NotAKnot(closed_loops, "closure has no crossings");
        std::vector<int> mate(4 * n, -1);
        for (auto& w : wires_) {
            if (!w) continue;
            const Att& a = (*w)[0];
            const Att& b = (*w)[1];
            mate[make_dart(a.a, a.p)] = make_dart(b.a, b.p);
            mate[make_dart(b.a, b.p)] = make_dart(a.a, a.p);
        }

        // Orbits of d -> mate[d + 2]: two per link component.
        std::vector<char> visited(4 * n, 0);
        int orbits = 0;
        std::vector<Dart> arrivals;  // arrival darts of the first orbit
        for (Dart d0 = 0; d0 < 4 * n; ++d0) {
            if (visited[d0]) continue;
            ++orbits;
            Dart d = d0;
            while (!visited[d]) {
                visited[d] = 1;
                if (orbits == 1) arrivals.push_back(d);
                d = mate[make_dart(dart_crossing(d), (dart_port(d) + 2) % 4)];
            }
        }
        int components = orbits / 2 + closed_loops;
        if (components != 1) throw NotAKnot(components, "closure is a link");

        // Label edges 1..2n along the traced orientation.
        std::vector<int> label(4 * n, 0);
        const int m = static_cast<int>(arrivals.size());
        for (int i = 0; i < m; ++i) {
            Dart out = make_dart(dart_crossing(arrivals[i]), (dart_port(arrivals[i]) + 2) % 4);
            label[out] = i + 1;
            label[arrivals[(i + 1) % m]] = i + 1;
        }
        std::vector<char> arrived(4 * n, 0);
        for (Dart d : arrivals) arrived[d] = 1;

        std::vector<std::array<int, 4>> pd(n);
        for (int c = 0; c < n; ++c) {
            // incoming under-port: on the under diagonal and an arrival
            int u0 = over_d02[c] ? 1 : 0;  // under diagonal ports u0, u0+2
            int k = arrived[make_dart(c, u0)] ? u0 : u0 + 2;
            for (int j = 0; j < 4; ++j) pd[c][j] = label[make_dart(c, (k + j) % 4)];
        }
        return Diagram(std::move(pd));
    }

private:
    std::vector<std::optional<std::array<Att, 2>>> wires_;
    std::map<int, std::pair<int, int>> plugs_;
    int next_plug_ = 0;
};

// A tangle under construction: its four open corner plugs.
struct TangleEnds {
    int nw, ne, sw, se;
};

TangleEnds base0(Builder& b) {
    auto [nw, ne] = b.strand();
    auto [sw, se] = b.strand();
    return {nw, ne, sw, se};
}

TangleEnds base_inf(Builder& b) {
    auto [nw, sw] = b.strand();
    auto [ne, se] = b.strand();
    return {nw, ne, sw, se};
}

void east_twist(Builder& b, TangleEnds& t, int sgn) {
    bool d02 = sgn > 0 ? kEastPosOverD02 : !kEastPosOverD02;
    auto [c, pl] = b.new_crossing(d02);
    b.splice(t.ne, pl[kNW]);
    b.splice(t.se, pl[kSW]);
    t.ne = pl[kNE];
    t.se = pl[kSE];
}

void south_twist(Builder& b, TangleEnds& t, int sgn) {
    bool d02 = sgn > 0 ? kSouthPosOverD02 : !kSouthPosOverD02;
    auto [c, pl] = b.new_crossing(d02);
    b.splice(t.sw, pl[kNW]);
    b.splice(t.se, pl[kNE]);
    t.sw = pl[kSW];
    t.se = pl[kSE];
}

TangleEnds build_tangle(Builder& b, const std::vector<long long>& cf) {
    TangleEnds t{};
    size_t start = 0;
    if (cf.at(0) == 0) {
        t = base_inf(b);
        start = 1;
    } else {
        t = base0(b);
    }
    for (size_t j = start; j < cf.size(); ++j) {
        long long c = cf[j];
        int sgn = c > 0 ? 1 : -1;
        for (long long i = 0; i < std::llabs(c); ++i) {
            if (j % 2 == 0)
                east_twist(b, t, sgn);
            else
                south_twist(b, t, sgn);
        }
    }
    return t;
}

// Regular continued-fraction digits of p/q > 0, outermost-first; the first
// digit is floor(p/q), the rest are >= 1.
std::vector<long long> cf_digits(long long p, long long q) {
    std::vector<long long> out;
    while (q != 0) {
        out.push_back(p / q);
        long long r = p % q;
        p = q;
        q = r;
    }
    return out;
}

std::vector<long long> expand_impl(const Frac& r, CfForm form) {
    // note: boost::rational comparisons against bare int literals misbehave
    // for this instantiation, so all sign tests go through the numerator
    if (r.numerator() == 0) throw MalformedCode("tangle slope must be nonzero");
    long long s = r.numerator() > 0 ? 1 : -1;
    std::vector<long long> d =
        cf_digits(std::llabs(r.numerator()), std::llabs(r.denominator()));
    if (d.front() == 0) d.erase(d.begin());
    bool outer_east = std::llabs(r.numerator()) >= r.denominator();
    std::reverse(d.begin(), d.end());  // innermost-first
    // odd (1-based) stored positions are horizontal; the innermost digit must
    // land on a horizontal slot exactly when parity works out
    bool inner_east = outer_east == (d.size() % 2 == 1);
    bool marker = false;
    if (!inner_east) {
        if (form == CfForm::Plain) {
            d.insert(d.begin(), 0);  // start from the infinity tangle
            marker = true;
        } else {
            long long a = d.front();  // a >= 2 whenever the parity is off
            d.front() = a - 1;
            d.insert(d.begin(), 1);
        }
    }
    std::vector<long long> stored(d.size());
    for (size_t j = 0; j < d.size(); ++j) {
        long long honest = (marker && j == 0) ? 0 : d[j] * s;
        stored[j] = (j % 2 == 1) ? -honest : honest;
    }
    if (form == CfForm::Alternating) {
        for (size_t j = 0; j < stored.size(); ++j) {
            if (stored[j] == 0) throw NormalizationBug("alternating form produced a zero");
            if (j + 1 < stored.size() && (stored[j] > 0) == (stored[j + 1] > 0))
                throw NormalizationBug("alternating form is not sign-alternating");
        }
    }
    return stored;
}

}  // namespace

Frac parse_fraction(const std::string& text) {
    size_t slash = text.find('/');
    try {
        long long num = std::stoll(slash == std::string::npos ? text : text.substr(0, slash));
        long long den = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
        if (den == 0) throw MalformedCode("zero denominator in \"" + text + "\"");
        if (num == 0) throw MalformedCode("tangle slope must be nonzero");
        return Frac(num, den);
    } catch (const std::invalid_argument&) {
        throw MalformedCode("cannot parse fraction \"" + text + "\"");
    } catch (const std::out_of_range&) {
        throw MalformedCode("fraction out of range \"" + text + "\"");
    }
}

std::vector<long long> cf_expand(const Frac& r, CfForm form) { return expand_impl(r, form); }

Frac cf_eval(const std::vector<long long>& cf) {
    if (cf.empty()) throw MalformedCode("empty continued fraction");
    // projective evaluation num/den; den may pass through 0 (infinity tangle)
    long long num = 0, den = 1;
    size_t start = 0;
    if (cf[0] == 0) {
        num = 1;
        den = 0;
        start = 1;
    }
    for (size_t j = start; j < cf.size(); ++j) {
        if (j % 2 == 0)
            num += cf[j] * den;  // horizontal box adds to the slope
        else
            den -= cf[j] * num;  // vertical box (stored negated)
    }
    if (den == 0) throw MalformedCode("continued fraction evaluates to infinity");
    return Frac(num, den);
}

Diagram build_montesinos(const std::vector<Frac>& params, CfForm form) {
    if (params.empty()) throw MalformedCode("Montesinos parameter list is empty");
    Builder b;
    std::vector<TangleEnds> ts;
    ts.reserve(params.size());
    for (const Frac& r : params) ts.push_back(build_tangle(b, cf_expand(r, form)));
    const size_t k = ts.size();
    for (size_t i = 0; i < k; ++i) {
        size_t j = (i + 1) % k;
        b.splice(ts[i].ne, ts[j].nw);
        b.splice(ts[i].se, ts[j].sw);
    }
    return b.finalize();
}

Diagram build_pretzel(const std::vector<long long>& a) {
    std::vector<Frac> params;
    params.reserve(a.size());
    for (long long x : a) {
        if (x == 0) throw MalformedCode("pretzel parameters must be nonzero");
        params.emplace_back(1, x);
    }
    return build_montesinos(params, CfForm::Plain);
}

std::vector<Frac> reorder_tangles(std::vector<Frac> params) {
    std::stable_partition(params.begin(), params.end(),
                          [](const Frac& r) { return r.numerator() < 0; });
    return params;
}

NormalizeResult normalize_montesinos(const std::vector<Frac>& params) {
    if (params.empty()) throw MalformedCode("Montesinos parameter list is empty");
    int pos = 0;
    for (const Frac& r : params) pos += r.numerator() > 0;
    long long s = 2 * pos >= static_cast<int>(params.size()) ? 1 : -1;

    std::vector<Frac> out;
    long long comp = 0;
    for (const Frac& r : params) {
        if ((r.numerator() > 0 ? 1 : -1) == s) {
            out.push_back(r);
            continue;
        }
        // add full twists until the slope crosses to the majority sign
        long long k = 1;
        while (true) {
            Frac shifted = r + Frac(2 * s * k);
            if (shifted.numerator() != 0 && (shifted.numerator() > 0 ? 1 : -1) == s) {
                out.push_back(shifted);
                comp -= 2 * s * k;
                break;
            }
            ++k;
        }
    }
    if (comp != 0) out.emplace_back(comp);

    NormalizeResult res{build_montesinos(out, CfForm::Alternating), std::move(out)};
    BadnessReport b = badness(res.diagram);
    if (b.B > 4)
        throw NormalizationBug("normalized diagram has badness " + std::to_string(b.B));
    return res;
}

}  // namespace knotthin
