#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bandprime {

enum class Color { black, white };

inline Color opposite(Color c) { return c == Color::black ? Color::white : Color::black; }
const char* to_string(Color c);

// Slot positions at a crossing: 0 is the incoming under-strand, the rest follow counterclockwise.
struct Endpoint {
    int crossing = 0;
    int slot = 0;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// The corner with index k lies between slots k and k+1.
struct Corner {
    int crossing = 0;
    int index = 0;
    friend bool operator==(const Corner&, const Corner&) = default;
};

/// Sign of a crossing given the slots where the under and over strands enter.
int crossing_sign(int under_in, int over_in);

/// A connected knot or link diagram given by a planar diagram code.
/// Construction validates labels, connectivity, strand orientation and the Euler face count.
class Diagram {
public:
    Diagram() : faces_(2) {}
    explicit Diagram(std::vector<std::array<int, 4>> crossings);

    const std::vector<std::array<int, 4>>& crossings() const noexcept { return x_; }
    int crossing_count() const noexcept { return static_cast<int>(x_.size()); }
    int arc_count() const noexcept { return 2 * crossing_count(); }

    int label(Endpoint e) const { return x_[e.crossing][e.slot]; }
    Endpoint other_end(Endpoint e) const;

    // Orientation data. Arcs are indexed by label.
    Endpoint head(int label) const { return head_[label - 1]; }
    Endpoint tail(int label) const { return other_end(head(label)); }
    int over_in(int crossing) const { return over_in_[crossing]; }
    int sign(int crossing) const { return crossing_sign(0, over_in_[crossing]); }
    int component_count() const noexcept { return components_; }
    int component_of(int label) const { return component_[label - 1]; }

    /// Faces as corner cycles in tracing order (face on the right, i.e. clockwise).
    const std::vector<std::vector<Corner>>& faces() const noexcept { return faces_; }
    int face_of(Corner k) const { return face_of_[k.crossing][k.index]; }
    /// Arc labels on the boundary of a face.
    std::vector<int> face_arcs(int face) const;

    /// Canonical "X(a,b,c,d) ..." text.
    std::string to_pd() const;

    friend bool operator==(const Diagram& a, const Diagram& b) { return a.x_ == b.x_; }

private:
    void index_arcs();
    void check_connected() const;
    void propagate_orientation();
    void trace_faces();

    std::vector<std::array<int, 4>> x_;
    std::vector<std::array<Endpoint, 2>> ends_;
    std::vector<Endpoint> head_;
    std::vector<int> over_in_;
    std::vector<int> component_;
    int components_ = 1;
    std::vector<std::vector<Corner>> faces_;
    std::vector<std::array<int, 4>> face_of_;
};

/// Parses whitespace-separated X(a,b,c,d) tokens, or a JSON array of quadruples.
/// Empty input is the 0-crossing unknot.
Diagram parse_pd(const std::string& text);

struct OrientedDiagram {
    Diagram diagram;
    std::vector<int> signs;
    int components = 1;

    bool is_knot() const noexcept { return components == 1; }
    int writhe() const;
};

OrientedDiagram orient(const Diagram& d);

bool is_alternating(const Diagram& d);

/// Reverses every crossing; the projection and its faces are unchanged.
Diagram mirror(const Diagram& d);

struct Checkerboard {
    Diagram diagram;
    std::vector<Color> face_color;
    std::vector<Color> even_color;  // color of corners 0 and 2 at each crossing

    Color color_of(Corner k) const {
        return k.index % 2 == 0 ? even_color[k.crossing] : opposite(even_color[k.crossing]);
    }
    std::vector<int> faces_of(Color c) const;
    /// Two faces of color c meeting at the crossing, ordered (tail, head): the first touches slot 0.
    std::array<int, 2> incident_faces(int crossing, Color c) const;
    /// Goeritz incidence type of a crossing for color c: -1 if c holds corners {0,2}, +1 otherwise.
    int twist_sign(int crossing, Color c) const { return even_color[crossing] == c ? -1 : 1; }
};

Checkerboard checkerboard(const Diagram& d);

/// Seifert circles as lists of arc labels, in traversal order.
std::vector<std::vector<int>> seifert_circles(const OrientedDiagram& od);

struct SeifertStats {
    int circles = 1;
    int genus = 0;
};

SeifertStats seifert_stats(const OrientedDiagram& od);

struct SpecialityReport {
    bool is_alternating = false;
    bool is_special = false;
    std::optional<Color> orientable_color;
    std::optional<int> uniform_sign;
    bool mirror_applied = false;

    bool special_alternating() const noexcept { return is_special && is_alternating; }
};

SpecialityReport classify_special(const OrientedDiagram& od);

/// Crossings whose black Tait edge is a loop or a bridge.
std::vector<int> nugatory_crossings(const Diagram& d);

struct DiagramFactor {
    Diagram diagram;
    std::vector<int> crossings;  // indices into the source diagram
};

/// Splits an alternating diagram at the cut vertices of its black Tait graph.
std::vector<DiagramFactor> factorize(const Diagram& d);
std::vector<Diagram> connected_sum_factors(const Diagram& d);

}  // namespace bandprime
