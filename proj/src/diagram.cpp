#include "bandprime/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "bandprime/error.hpp"
#include "bandprime/tait.hpp"

namespace bandprime {

const char* to_string(Color c) { return c == Color::black ? "black" : "white"; }

int crossing_sign(int under_in, int over_in) { return over_in == (under_in + 3) % 4 ? 1 : -1; }

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Endpoint through(Endpoint e) { return {e.crossing, (e.slot + 2) % 4}; }

}  // namespace

Diagram::Diagram(std::vector<std::array<int, 4>> crossings) : x_(std::move(crossings)) {
    if (x_.empty()) {
        faces_.assign(2, {});
        return;
    }
    index_arcs();
    check_connected();
    propagate_orientation();
    trace_faces();
}

void Diagram::index_arcs() {
    const int arcs = arc_count();
    std::map<int, std::vector<Endpoint>> seen;
    for (int c = 0; c < crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) seen[x_[c][s]].push_back({c, s});

    std::ostringstream bad;
    for (const auto& [lab, where] : seen) {
        if (lab < 1 || lab > arcs)
            bad << ' ' << lab << " (out of range)";
        else if (where.size() != 2)
            bad << ' ' << lab << " (" << where.size() << " uses)";
    }
    for (int lab = 1; lab <= arcs; ++lab)
        if (!seen.count(lab)) bad << ' ' << lab << " (missing)";
    if (!bad.str().empty())
        throw ValidationError("arc labels must be 1.." + std::to_string(arcs) + ", each used twice; offending:" +
                              bad.str());

    ends_.resize(arcs);
    for (const auto& [lab, where] : seen) ends_[lab - 1] = {where[0], where[1]};
}

Endpoint Diagram::other_end(Endpoint e) const {
    const auto& pair = ends_[label(e) - 1];
    return pair[0] == e ? pair[1] : pair[0];
}

void Diagram::check_connected() const {
    UnionFind uf(crossing_count());
    for (const auto& pair : ends_) uf.unite(pair[0].crossing, pair[1].crossing);
    for (int c = 1; c < crossing_count(); ++c)
        if (uf.find(c) != uf.find(0)) throw ValidationError("diagram is split (not connected)");
}

void Diagram::propagate_orientation() {
    const int arcs = arc_count();
    head_.assign(arcs, {});
    component_.assign(arcs, -1);
    components_ = 0;
    for (int seed = 1; seed <= arcs; ++seed) {
        if (component_[seed - 1] >= 0) continue;
        // Walk the strand once from the seed in a provisional direction.
        const auto& se = ends_[seed - 1];
        Endpoint h = se[1];
        for (const Endpoint& cand : se)
            if (label(through(cand)) == seed % arcs + 1) {
                h = cand;
                break;
            }
        std::vector<std::pair<int, Endpoint>> walk;
        int lab = seed;
        do {
            walk.emplace_back(lab, h);
            const Endpoint t = through(h);
            lab = label(t);
            h = other_end(t);
        } while (lab != seed);

        int forward = 0, backward = 0;
        for (const auto& [l, hd] : walk) {
            if (hd.slot == 0) ++forward;
            if (hd.slot == 2) ++backward;
        }
        if (forward && backward)
            throw ValidationError("under-strands disagree on orientation along the component through arc " +
                                  std::to_string(seed));
        const bool flip = backward > 0;
        for (const auto& [l, hd] : walk) {
            head_[l - 1] = flip ? other_end(hd) : hd;
            component_[l - 1] = components_;
        }
        ++components_;
    }

    over_in_.assign(crossing_count(), 0);
    for (int c = 0; c < crossing_count(); ++c) {
        const bool in1 = head(x_[c][1]) == Endpoint{c, 1};
        const bool in3 = head(x_[c][3]) == Endpoint{c, 3};
        if (in1 == in3) throw ValidationError("over-strand orientation is inconsistent at crossing " + std::to_string(c));
        over_in_[c] = in1 ? 1 : 3;
    }
}

void Diagram::trace_faces() {
    const int n = crossing_count();
    face_of_.assign(n, {-1, -1, -1, -1});
    std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
    faces_.clear();
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (used[c][s]) continue;
            std::vector<Corner> face;
            Endpoint d{c, s};
            while (!used[d.crossing][d.slot]) {
                used[d.crossing][d.slot] = true;
                const Endpoint arrive = other_end(d);
                face.push_back({arrive.crossing, arrive.slot});
                d = {arrive.crossing, (arrive.slot + 1) % 4};
            }
            for (const Corner& k : face) face_of_[k.crossing][k.index] = static_cast<int>(faces_.size());
            faces_.push_back(std::move(face));
        }
    if (static_cast<int>(faces_.size()) != n + 2)
        throw ValidationError("rotation system is not planar: " + std::to_string(faces_.size()) + " faces, expected " +
                              std::to_string(n + 2));
}

std::vector<int> Diagram::face_arcs(int face) const {
    std::vector<int> out;
    for (const Corner& k : faces_[face]) out.push_back(x_[k.crossing][k.index]);
    return out;
}

std::string Diagram::to_pd() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < x_.size(); ++c) {
        if (c) os << ' ';
        os << "X(" << x_[c][0] << ',' << x_[c][1] << ',' << x_[c][2] << ',' << x_[c][3] << ')';
    }
    return os.str();
}

namespace {

Diagram parse_json_pd(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("JSON PD must be an array of quadruples");
    std::vector<std::array<int, 4>> xs;
    for (const auto& q : j) {
        if (!q.is_array() || q.size() != 4) throw ParseError("JSON PD entries must have exactly 4 labels");
        std::array<int, 4> x{};
        for (int i = 0; i < 4; ++i) {
            if (!q[i].is_number_integer() || q[i].get<long long>() < 1 || q[i].get<long long>() > 1'000'000)
                throw ParseError("JSON PD labels must be positive integers");
            x[i] = q[i].get<int>();
        }
        xs.push_back(x);
    }
    return Diagram(std::move(xs));
}

class PdScanner {
public:
    explicit PdScanner(const std::string& s) : s_(s) {}

    std::vector<std::array<int, 4>> run() {
        std::vector<std::array<int, 4>> xs;
        skip_ws();
        while (pos_ < s_.size()) {
            expect('X');
            skip_ws();
            expect('(');
            std::array<int, 4> x{};
            for (int i = 0; i < 4; ++i) {
                skip_ws();
                x[i] = number();
                skip_ws();
                expect(i < 3 ? ',' : ')');
            }
            xs.push_back(x);
            const std::size_t before = pos_;
            skip_ws();
            if (pos_ < s_.size() && pos_ == before) fail("expected whitespace between crossings");
        }
        return xs;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_));
    }
    void expect(char ch) {
        if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }
    int number() {
        const std::size_t start = pos_;
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) fail("label too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a positive integer");
        if (v == 0) fail("labels must be positive");
        return static_cast<int>(v);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd(const std::string& text) {
    const auto first = std::find_if(text.begin(), text.end(), [](unsigned char ch) { return !std::isspace(ch); });
    if (first == text.end()) return Diagram{};
    if (*first == '[') return parse_json_pd(text);
    return Diagram(PdScanner(text).run());
}

int OrientedDiagram::writhe() const { return std::accumulate(signs.begin(), signs.end(), 0); }

OrientedDiagram orient(const Diagram& d) {
    OrientedDiagram od{d, {}, d.component_count()};
    for (int c = 0; c < d.crossing_count(); ++c) od.signs.push_back(d.sign(c));
    return od;
}

bool is_alternating(const Diagram& d) {
    // Alternation means every arc runs from an under slot (even) to an over slot (odd).
    for (int lab = 1; lab <= d.arc_count(); ++lab)
        if ((d.head(lab).slot + d.tail(lab).slot) % 2 == 0) return false;
    return true;
}

Diagram mirror(const Diagram& d) {
    std::vector<std::array<int, 4>> xs;
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& x = d.crossings()[c];
        if (d.over_in(c) == 3)
            xs.push_back({x[3], x[0], x[1], x[2]});
        else
            xs.push_back({x[1], x[2], x[3], x[0]});
    }
    return Diagram(std::move(xs));
}

std::vector<int> Checkerboard::faces_of(Color c) const {
    std::vector<int> out;
    for (std::size_t f = 0; f < face_color.size(); ++f)
        if (face_color[f] == c) out.push_back(static_cast<int>(f));
    return out;
}

std::array<int, 2> Checkerboard::incident_faces(int crossing, Color c) const {
    if (even_color[crossing] == c)
        return {diagram.face_of({crossing, 0}), diagram.face_of({crossing, 2})};
    return {diagram.face_of({crossing, 3}), diagram.face_of({crossing, 1})};
}

Checkerboard checkerboard(const Diagram& d) {
    Checkerboard cb{d, {}, {}};
    const int nf = static_cast<int>(d.faces().size());
    if (d.crossing_count() == 0) {
        cb.face_color = {Color::black, Color::white};
        return cb;
    }
    // Faces on either side of a strand at a crossing get opposite colors.
    std::vector<std::vector<int>> adj(nf);
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int k = 0; k < 4; ++k) {
            const int a = d.face_of({c, k}), b = d.face_of({c, (k + 1) % 4});
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<int> col(nf, -1);
    const int root = d.face_of({0, 0});
    col[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int b : adj[queue[i]]) {
            if (col[b] < 0) {
                col[b] = 1 - col[queue[i]];
                queue.push_back(b);
            } else if (col[b] == col[queue[i]]) {
                throw InconsistencyError("face adjacency is not bipartite");
            }
        }
    for (int f = 0; f < nf; ++f) {
        if (col[f] < 0) throw InconsistencyError("face adjacency is disconnected");
        cb.face_color.push_back(col[f] == 0 ? Color::black : Color::white);
    }
    for (int c = 0; c < d.crossing_count(); ++c) cb.even_color.push_back(cb.face_color[d.face_of({c, 0})]);
    return cb;
}

std::vector<std::vector<int>> seifert_circles(const OrientedDiagram& od) {
    const Diagram& d = od.diagram;
    if (d.crossing_count() == 0) return {{}};
    // Oriented smoothing: under-in continues to over-out, over-in continues to under-out.
    auto next = [&](int lab) {
        const Endpoint h = d.head(lab);
        const int out = h.slot == 0 ? (d.over_in(h.crossing) + 2) % 4 : 2;
        return d.label({h.crossing, out});
    };
    std::vector<bool> seen(d.arc_count() + 1, false);
    std::vector<std::vector<int>> circles;
    for (int lab = 1; lab <= d.arc_count(); ++lab) {
        if (seen[lab]) continue;
        std::vector<int> circle;
        for (int a = lab; !seen[a]; a = next(a)) {
            seen[a] = true;
            circle.push_back(a);
        }
        circles.push_back(std::move(circle));
    }
    return circles;
}

SeifertStats seifert_stats(const OrientedDiagram& od) {
    if (!od.is_knot()) throw PreconditionError("Seifert genus requires a knot diagram");
    const int s = static_cast<int>(seifert_circles(od).size());
    return {s, (od.diagram.crossing_count() - s + 1) / 2};
}

namespace {

// True when the arcs are grouped identically by Seifert circles and by the faces of color c.
bool circles_are_faces(const Checkerboard& cb, const std::vector<std::vector<int>>& circles, Color c) {
    const Diagram& d = cb.diagram;
    std::vector<int> circle_of(d.arc_count() + 1, -1), face_of(d.arc_count() + 1, -1);
    for (std::size_t i = 0; i < circles.size(); ++i)
        for (int a : circles[i]) circle_of[a] = static_cast<int>(i);
    for (int f : cb.faces_of(c))
        for (int a : d.face_arcs(f)) face_of[a] = f;
    std::map<int, int> fwd, bwd;
    for (int a = 1; a <= d.arc_count(); ++a) {
        if (face_of[a] < 0) return false;
        auto [it1, new1] = fwd.emplace(circle_of[a], face_of[a]);
        auto [it2, new2] = bwd.emplace(face_of[a], circle_of[a]);
        if (it1->second != face_of[a] || it2->second != circle_of[a]) return false;
    }
    return true;
}

}  // namespace

SpecialityReport classify_special(const OrientedDiagram& od) {
    if (!od.is_knot()) throw PreconditionError("speciality classification requires a knot diagram");
    const Diagram& d = od.diagram;
    SpecialityReport r;
    r.is_alternating = is_alternating(d);
    if (d.crossing_count() == 0) {
        r.is_special = true;
        r.orientable_color = Color::black;
        return r;
    }
    const Checkerboard cb = checkerboard(d);
    const auto circles = seifert_circles(od);
    for (Color c : {Color::black, Color::white})
        if (circles_are_faces(cb, circles, c)) {
            r.orientable_color = c;
            break;
        }
    r.is_special = r.orientable_color.has_value();

    const bool uniform = std::all_of(od.signs.begin(), od.signs.end(), [&](int s) { return s == od.signs[0]; });
    if (uniform) r.uniform_sign = od.signs[0];
    r.mirror_applied = r.uniform_sign == -1;

    if (r.is_alternating) {
        if (r.is_special != uniform)
            throw InconsistencyError("Seifert-circle test and crossing-sign test disagree on speciality");
        if (r.is_special) {
            // Positive crossings cut off corners {0,2}; negative ones cut off {1,3}.
            const Color expect = *r.uniform_sign > 0 ? cb.even_color[0] : opposite(cb.even_color[0]);
            if (expect != *r.orientable_color)
                throw InconsistencyError("orientable color does not match the crossing signs");
        }
    }
    return r;
}

std::vector<int> nugatory_crossings(const Diagram& d) {
    if (d.crossing_count() == 0) return {};
    const TaitGraph g = tait_graph(checkerboard(d), Color::black);
    std::vector<int> out;
    for (const auto& b : blocks(g).blocks)
        if (b.size() == 1) out.push_back(g.edges[b[0]].crossing);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct EndpointLess {
    bool operator()(const Endpoint& a, const Endpoint& b) const {
        return a.crossing != b.crossing ? a.crossing < b.crossing : a.slot < b.slot;
    }
};

Diagram extract_factor(const Diagram& d, const std::vector<int>& members) {
    std::vector<int> local(d.crossing_count(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);

    // Pair up slots of member crossings, following strands through the rest of the diagram.
    std::map<Endpoint, Endpoint, EndpointLess> partner;
    for (int c : members)
        for (int s = 0; s < 4; ++s) {
            Endpoint e = d.other_end({c, s});
            for (int guard = 0; local[e.crossing] < 0; ++guard) {
                if (guard > 4 * d.crossing_count()) throw InconsistencyError("strand never returns to factor");
                e = d.other_end(through(e));
            }
            partner[{local[c], s}] = {local[e.crossing], e.slot};
        }

    auto is_head = [&](Endpoint e) { return e.slot == 0 || e.slot == d.over_in(members[e.crossing]); };
    std::vector<std::array<int, 4>> xs(members.size(), {0, 0, 0, 0});
    int next_label = 1;
    for (int c = 0; c < static_cast<int>(members.size()); ++c)
        for (int s : {0, d.over_in(members[c])}) {
            Endpoint h{c, s};
            while (xs[h.crossing][h.slot] == 0) {
                const Endpoint t = partner.at(h);
                xs[h.crossing][h.slot] = xs[t.crossing][t.slot] = next_label++;
                h = partner.at(through(h));
                if (!is_head(h)) throw InconsistencyError("factor strand orientation broke");
            }
        }
    return Diagram(std::move(xs));
}

}  // namespace

std::vector<DiagramFactor> factorize(const Diagram& d) {
    if (!is_alternating(d)) throw PreconditionError("connected-sum factorization requires an alternating diagram");
    if (d.crossing_count() == 0) return {{d, {}}};
    const TaitGraph g = tait_graph(checkerboard(d), Color::black);
    std::vector<DiagramFactor> out;
    for (const auto& b : blocks(g).blocks) {
        std::vector<int> members;
        for (int e : b) members.push_back(g.edges[e].crossing);
        std::sort(members.begin(), members.end());
        out.push_back({extract_factor(d, members), members});
    }
    std::sort(out.begin(), out.end(),
              [](const DiagramFactor& a, const DiagramFactor& b) { return a.crossings.front() < b.crossings.front(); });
    return out;
}

std::vector<Diagram> connected_sum_factors(const Diagram& d) {
    std::vector<Diagram> out;
    for (auto& f : factorize(d)) out.push_back(std::move(f.diagram));
    return out;
}

}  // namespace bandprime
