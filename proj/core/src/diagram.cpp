#include "knotthin/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "knotthin/errors.hpp"

namespace knotthin {

const char* quadrant_name(Quadrant q) {
    switch (q) {
        case Quadrant::S: return "S";
        case Quadrant::E: return "E";
        case Quadrant::N: return "N";
        case Quadrant::W: return "W";
    }
    return "?";
}

Diagram::Diagram(std::vector<std::array<int, 4>> crossings) : x_(std::move(crossings)) {
    validate_and_relabel();
    build_faces();
}

void Diagram::validate_and_relabel() {
    const int n = this->n();
    signs_.assign(n, 0);
    if (n == 0) return;

    std::map<int, std::vector<Dart>> occ;
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            int lab = x_[c][p];
            if (lab <= 0) throw MalformedCode("edge label " + std::to_string(lab) + " must be positive");
            occ[lab].push_back(make_dart(c, p));
        }
    if (static_cast<int>(occ.size()) != 2 * n)
        throw MalformedCode("expected " + std::to_string(2 * n) + " distinct edge labels, got " +
                            std::to_string(occ.size()));
    for (auto& [lab, darts] : occ)
        if (darts.size() != 2)
            throw MalformedCode("label " + std::to_string(lab) + " occurs " +
                                std::to_string(darts.size()) + " times");

    std::vector<Dart> mate(4 * n);
    for (auto& [lab, darts] : occ) {
        mate[darts[0]] = darts[1];
        mate[darts[1]] = darts[0];
        if (darts[0] == darts[1]) throw MalformedCode("self-mated dart");
    }

    // Orient by tracing the knot. Port 0 is an arrival by convention; from an
    // arrival at port p the strand exits at port p+2, and the exit dart's mate
    // is the next arrival. A valid knot code closes into one cycle through
    // all 2n edges with every port-0 dart an arrival and port-2 an exit.
    std::vector<char> role(4 * n, 0);  // 0 unknown, 1 arrival, 2 exit
    Dart start = 0;  // crossing 0, port 0
    Dart cur = start;
    std::vector<Dart> exit_order;  // exit dart of the k-th traversal edge
    exit_order.reserve(2 * n);
    while (true) {
        if (role[cur] != 0) throw MalformedCode("inconsistent strand orientation at dart " + std::to_string(cur));
        role[cur] = 1;
        if (dart_port(cur) == 2)
            throw MalformedCode("under-strand arrives at port 2 of crossing " +
                                std::to_string(dart_crossing(cur)) + " (first slot must be the incoming under-edge)");
        Dart out = make_dart(dart_crossing(cur), (dart_port(cur) + 2) % 4);
        if (role[out] != 0) throw MalformedCode("inconsistent strand orientation at dart " + std::to_string(out));
        role[out] = 2;
        if (dart_port(out) == 0)
            throw MalformedCode("under-strand exits at port 0 of crossing " + std::to_string(dart_crossing(out)));
        exit_order.push_back(out);
        cur = mate[out];
        if (cur == start) break;
        if (static_cast<int>(exit_order.size()) > 2 * n)
            throw MalformedCode("knot traversal does not close");
    }
    if (static_cast<int>(exit_order.size()) != 2 * n)
        throw Disconnected("traversal visits " + std::to_string(exit_order.size()) + " of " +
                           std::to_string(2 * n) + " edges");

    // Relabel 1..2n along the traversal, starting at the edge whose current
    // label is smallest so canonical inputs round-trip unchanged.
    int start_idx = 0;
    for (int i = 1; i < 2 * n; ++i)
        if (edge_label(exit_order[i]) < edge_label(exit_order[start_idx])) start_idx = i;
    std::vector<int> newlab(4 * n, 0);
    for (int k = 0; k < 2 * n; ++k) {
        Dart out = exit_order[(start_idx + k) % (2 * n)];
        newlab[out] = k + 1;
        newlab[mate[out]] = k + 1;
    }
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) x_[c][p] = newlab[make_dart(c, p)];

    edge_darts_.assign(2 * n, {0, 0});
    std::vector<int> seen(2 * n, 0);
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            int lab = x_[c][p];
            edge_darts_[lab - 1][seen[lab - 1]++ ? 1 : 0] = make_dart(c, p);
        }

    // Sign: positive iff the over strand arrives at port 3 (equivalently its
    // labels satisfy b = succ(d), i.e. it runs d -> b and exits at port 1).
    for (int c = 0; c < n; ++c) {
        if (role[make_dart(c, 3)] == 1)
            signs_[c] = +1;
        else
            signs_[c] = -1;
    }
}

void Diagram::build_faces() {
    const int n = this->n();
    face_of_.assign(4 * n, -1);
    faces_.clear();
    if (n == 0) return;

    std::vector<Dart> mate(4 * n);
    for (int lab = 1; lab <= 2 * n; ++lab) {
        auto [d1, d2] = edge_darts(lab);
        mate[d1] = d2;
        mate[d2] = d1;
    }
    // Next sector around a face: cross the edge at port p, then step one port
    // clockwise on the far side.
    for (Dart d0 = 0; d0 < 4 * n; ++d0) {
        if (face_of_[d0] >= 0) continue;
        int id = static_cast<int>(faces_.size());
        faces_.emplace_back();
        Dart d = d0;
        while (face_of_[d] < 0) {
            face_of_[d] = id;
            faces_.back().push_back(d);
            Dart m = mate[d];
            d = make_dart(dart_crossing(m), (dart_port(m) + 3) % 4);
        }
    }
    if (static_cast<int>(faces_.size()) != n + 2)
        throw NonPlanarEmbedding("face count " + std::to_string(faces_.size()) + " != " +
                                 std::to_string(n + 2));
}

int Diagram::writhe() const {
    int w = 0;
    for (int s : signs_) w += s;
    return w;
}

std::pair<Dart, Dart> Diagram::edge_darts(int label) const {
    return {edge_darts_[label - 1][0], edge_darts_[label - 1][1]};
}

std::pair<int, int> Diagram::edge_sides(int label) const {
    // The face on one side of the edge at dart (c,p) is the face of sector p;
    // taking that side at each endpoint covers both sides of the edge.
    auto [d1, d2] = edge_darts(label);
    return {face_of_[d1], face_of_[d2]};
}

Quadrant Diagram::quadrant(Dart sector) const {
    int c = dart_crossing(sector);
    int south = signs_[c] > 0 ? 3 : 0;  // sector between the two incoming strands
    return static_cast<Quadrant>((dart_port(sector) - south + 4) % 4);
}

Diagram Diagram::parse_pd(const std::string& text) {
    auto skip_ws = [&](size_t& i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    size_t i = 0;
    skip_ws(i);
    if (text.compare(i, 3, "PD[") != 0) throw MalformedCode("expected PD[...]");
    i += 3;
    std::vector<std::array<int, 4>> crossings;
    skip_ws(i);
    while (i < text.size() && text[i] != ']') {
        if (text.compare(i, 2, "X[") != 0) throw MalformedCode("expected X[a,b,c,d] at offset " + std::to_string(i));
        i += 2;
        std::array<int, 4> tup{};
        for (int k = 0; k < 4; ++k) {
            skip_ws(i);
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw MalformedCode("expected edge label at offset " + std::to_string(i));
            tup[k] = std::stoi(text.substr(i, j - i));
            i = j;
            skip_ws(i);
            if (k < 3) {
                if (i >= text.size() || text[i] != ',') throw MalformedCode("expected ',' in X[...]");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ']') throw MalformedCode("expected ']' closing X[...]");
        ++i;
        crossings.push_back(tup);
        skip_ws(i);
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip_ws(i);
        }
    }
    if (i >= text.size() || text[i] != ']') throw MalformedCode("expected ']' closing PD[...]");
    ++i;
    skip_ws(i);
    if (i != text.size()) throw MalformedCode("trailing characters after PD[...]");
    return Diagram(std::move(crossings));
}

std::string Diagram::to_pd() const {
    std::ostringstream out;
    out << "PD[";
    for (int c = 0; c < n(); ++c) {
        if (c) out << ",";
        out << "X[" << x_[c][0] << "," << x_[c][1] << "," << x_[c][2] << "," << x_[c][3] << "]";
    }
    out << "]";
    return out.str();
}

MarkedDiagram mark(const Diagram& d, int edge) {
    if (d.n() == 0) return MarkedDiagram{&d, 0, -1, -1};
    if (edge < 1 || edge > d.num_edges())
        throw MalformedCode("edge " + std::to_string(edge) + " out of range");
    auto [fa, fb] = d.edge_sides(edge);
    if (fa == fb)
        throw AmbiguousMarking("both sides of edge " + std::to_string(edge) +
                               " are domain " + std::to_string(fa));
    return MarkedDiagram{&d, edge, fa, fb};
}

}  // namespace knotthin
