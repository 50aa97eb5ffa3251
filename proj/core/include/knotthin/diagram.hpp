#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace knotthin {

// A dart is one of the four edge-ends at a crossing, encoded as 4*crossing +
// port. Ports run counterclockwise; port 0 carries the incoming under-edge,
// so the under strand runs 0 -> 2 and the over strand occupies ports 1 and 3.
//
// The same encoding doubles as a *sector* id: sector (c, p) is the corner
// region between ports p and p+1 (ccw) at crossing c. Faces are orbits of
// sectors, which keeps domains that meet a crossing in two quadrants exact.
using Dart = int;

constexpr int dart_crossing(Dart d) { return d >> 2; }
constexpr int dart_port(Dart d) { return d & 3; }
constexpr Dart make_dart(int c, int p) { return 4 * c + p; }

enum class Passage { Under, Over };

// Quadrant class relative to the crossing's orientation: S is the sector
// between the two incoming strands, N between the two outgoing ones,
// E/W the sides (ccw from S).
enum class Quadrant { S = 0, E = 1, N = 2, W = 3 };

const char* quadrant_name(Quadrant q);

class Diagram {
public:
    // Validates the tuples, relabels edges to 1..2n increasing along the
    // orientation, assigns signs and computes the face orbits.
    // Throws MalformedCode / Disconnected / NonPlanarEmbedding.
    explicit Diagram(std::vector<std::array<int, 4>> crossings);

    // Grammar: PD[X[a,b,c,d], ...]; PD[] is the 0-crossing unknot.
    static Diagram parse_pd(const std::string& text);
    std::string to_pd() const;

    int n() const { return static_cast<int>(x_.size()); }
    int num_edges() const { return 2 * n(); }
    int num_faces() const { return n() == 0 ? 2 : static_cast<int>(faces_.size()); }

    const std::vector<std::array<int, 4>>& crossings() const { return x_; }
    int sign(int c) const { return signs_[c]; }
    const std::vector<int>& signs() const { return signs_; }
    int writhe() const;

    int edge_label(Dart d) const { return x_[dart_crossing(d)][dart_port(d)]; }
    std::pair<Dart, Dart> edge_darts(int label) const;
    // Faces on the two sides of an edge (may coincide for nugatory edges).
    std::pair<int, int> edge_sides(int label) const;
    static Passage passage(Dart d) {
        return (dart_port(d) % 2 == 0) ? Passage::Under : Passage::Over;
    }

    // Face containing the sector between ports p and p+1 of crossing c.
    int face_of_sector(Dart d) const { return face_of_[d]; }
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }

    Quadrant quadrant(Dart sector) const;

private:
    void validate_and_relabel();
    void build_faces();

    std::vector<std::array<int, 4>> x_;
    std::vector<int> signs_;
    std::vector<int> face_of_;                // sector dart -> face id
    std::vector<std::vector<Dart>> faces_;    // face id -> sector orbit
    std::vector<std::array<Dart, 2>> edge_darts_;  // label-1 -> its two darts
};

// A marking is a point on an edge; it excludes the (distinct) domains on the
// edge's two sides from the Kauffman bijection.
struct MarkedDiagram {
    const Diagram* d = nullptr;
    int edge = 0;   // 0 for the 0-crossing unknot
    int fa = -1;    // excluded faces
    int fb = -1;
};

// Throws AmbiguousMarking when both sides of the edge are the same domain.
MarkedDiagram mark(const Diagram& d, int edge);

}  // namespace knotthin
