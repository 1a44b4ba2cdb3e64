#include "bandprime/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "bandprime/error.hpp"

namespace bandprime {

GramForm goeritz_matrix(const Checkerboard& cb, Color color) {
    const TaitGraph g = tait_graph(cb, color);
    const int n = g.vertex_count;
    if (n < 2) return GramForm(IntMatrix{}, Provenance::goeritz);
    IntMatrix lap(n, n);
    for (const TaitEdge& e : g.edges) {
        if (e.loop()) continue;
        const Int w = -e.sign;
        lap(e.tail, e.head) -= w;
        lap(e.head, e.tail) -= w;
        lap(e.tail, e.tail) += w;
        lap(e.head, e.head) += w;
    }
    std::vector<std::size_t> keep(n - 1);
    std::iota(keep.begin(), keep.end(), 1);
    return GramForm(lap.submatrix(keep, keep), Provenance::goeritz);
}

int gl_correction(const OrientedDiagram& od, const Checkerboard& cb, Color color) {
    int mu = 0;
    for (int c = 0; c < od.diagram.crossing_count(); ++c) {
        const bool even = cb.even_color[c] == color;
        // Positive crossings join corners {1,3}; negative ones join {0,2}.
        if ((od.signs[c] > 0) != even) mu += od.signs[c];
    }
    return mu;
}

int gl_signature(const OrientedDiagram& od) {
    if (!od.is_knot()) throw PreconditionError("signature requires a knot diagram");
    const Checkerboard cb = checkerboard(od.diagram);
    int values[2];
    for (Color y : {Color::black, Color::white}) {
        const GramForm q = goeritz_matrix(cb, y);
        values[y == Color::black ? 0 : 1] = signature(q) - gl_correction(od, cb, opposite(y));
    }
    if (values[0] != values[1]) throw InconsistencyError("signature depends on the checkerboard color");
    return values[0];
}

namespace {

struct Step {
    int edge;
    int dir;  // +1 tail to head
};

std::vector<Step> cycle_walk(const TaitGraph& g, const std::vector<Int>& x) {
    std::vector<bool> used(g.edge_count(), false);
    const int start = static_cast<int>(std::find(x.begin(), x.end(), 1) - x.begin());
    std::vector<Step> walk{{start, 1}};
    used[start] = true;
    int v = g.edges[start].head;
    const int home = g.edges[start].tail;
    while (v != home || walk.size() < 2) {
        int next = -1, dir = 0;
        for (int e = 0; e < g.edge_count() && next < 0; ++e) {
            if (used[e] || x[e] == 0) continue;
            if (x[e] == 1 && g.edges[e].tail == v) next = e, dir = 1;
            if (x[e] == -1 && g.edges[e].head == v) next = e, dir = -1;
        }
        if (next < 0) {
            if (v == home) break;  // loop edge
            throw InconsistencyError("cycle vector is not a closed walk");
        }
        used[next] = true;
        walk.push_back({next, dir});
        v = dir > 0 ? g.edges[next].head : g.edges[next].tail;
    }
    return walk;
}

}  // namespace

SeifertData seifert_data(const OrientedDiagram& od) {
    const SpecialityReport rep = classify_special(od);
    if (!rep.is_special) throw PreconditionError("Seifert matrix requires a special diagram");
    const Diagram& d = od.diagram;
    SeifertData out;
    out.color = *rep.orientable_color;
    const Checkerboard cb = checkerboard(d);
    out.graph = tait_graph(cb, out.color);
    const TaitGraph& g = out.graph;
    out.cycles = fundamental_cycles(g, TreeStrategy::dfs_highest);
    const auto r = out.cycles.size();
    out.matrix = IntMatrix(r, r);
    IntMatrix& v = out.matrix;
    if (r == 0) return out;

    // Corners where the band of a crossing meets its two faces.
    auto tail_corner = [&](int c) { return cb.even_color[c] == out.color ? 0 : 3; };
    auto head_corner = [&](int c) { return cb.even_color[c] == out.color ? 2 : 1; };

    std::vector<std::vector<Step>> walks;
    std::vector<std::vector<int>> dir_on(r, std::vector<int>(g.edge_count(), 0));
    for (std::size_t a = 0; a < r; ++a) {
        walks.push_back(cycle_walk(g, out.cycles[a]));
        for (const Step& s : walks[a]) dir_on[a][s.edge] = s.dir;
    }

    // Half twists: each band contributes -sign/2 to the self-linking of a curve through it.
    for (std::size_t a = 0; a < r; ++a) {
        int twice = 0;
        for (const Step& s : walks[a]) twice -= od.signs[g.edges[s.edge].crossing];
        if (twice % 2 != 0) throw InconsistencyError("half-integral Seifert self-linking");
        v(a, a) = twice / 2;
    }
    // Parallel tracks through one band: track a sits at position a.
    for (int e = 0; e < g.edge_count(); ++e)
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < a; ++b)
                if (dir_on[a][e] && dir_on[b][e])
                    v(a, b) -= od.signs[g.edges[e].crossing] * dir_on[a][e] * dir_on[b][e];

    // Chords across each disc.
    for (int vert = 0; vert < g.vertex_count; ++vert) {
        const int face = g.faces[vert];
        std::vector<Corner> ccw(d.faces()[face].rbegin(), d.faces()[face].rend());
        // The disc normal points down when the knot runs along the traced (clockwise) direction.
        int down = 0, up = 0;
        for (const Corner& k : d.faces()[face]) {
            const Endpoint leave{k.crossing, (k.index + 1) % 4};
            (d.tail(d.label(leave)) == leave ? down : up) += 1;
        }
        if (down && up) throw InconsistencyError("face boundary is not a Seifert circle");
        if (!down) continue;

        struct Mark {
            std::size_t cycle;
            Corner corner;
        };
        std::vector<Mark> seq;
        for (const Corner& k : ccw) {
            std::vector<std::size_t> tracks;
            for (std::size_t a = 0; a < r; ++a)
                if (dir_on[a][k.crossing]) tracks.push_back(a);
            if (k.index % 2 == 0) std::reverse(tracks.begin(), tracks.end());
            for (std::size_t a : tracks) seq.push_back({a, k});
        }
        const auto len = static_cast<long>(seq.size());
        std::vector<long> enter(r, -1), leave(r, -1);
        for (std::size_t a = 0; a < r; ++a) {
            const auto& w = walks[a];
            for (std::size_t i = 0; i < w.size(); ++i) {
                const Step& in = w[i];
                const Step& out_step = w[(i + 1) % w.size()];
                const int arrive = in.dir > 0 ? g.edges[in.edge].head : g.edges[in.edge].tail;
                if (arrive != vert) continue;
                const int cin = g.edges[in.edge].crossing, cout = g.edges[out_step.edge].crossing;
                const Corner pin{cin, in.dir > 0 ? head_corner(cin) : tail_corner(cin)};
                const Corner pout{cout, out_step.dir > 0 ? tail_corner(cout) : head_corner(cout)};
                for (long p = 0; p < len; ++p) {
                    if (seq[p].cycle != a) continue;
                    if (seq[p].corner == pin) enter[a] = p;
                    if (seq[p].corner == pout) leave[a] = p;
                }
            }
        }
        auto in_arc = [&](long x, long from, long to) {
            return x != from && (x - from + len) % len < (to - from + len) % len;
        };
        for (std::size_t a = 0; a < r; ++a) {
            if (enter[a] < 0) continue;
            for (std::size_t b = 0; b < r; ++b) {
                if (a == b || enter[b] < 0) continue;
                const bool pb = in_arc(enter[b], enter[a], leave[a]);
                const bool qb = in_arc(leave[b], enter[a], leave[a]);
                if (pb != qb) v(a, b) += pb ? 1 : -1;
            }
        }
    }
    return out;
}

IntMatrix seifert_matrix_special(const OrientedDiagram& od) { return seifert_data(od).matrix; }

LaurentPolynomial alexander_from_seifert(const IntMatrix& v) {
    const std::size_t n = v.rows();
    std::vector<std::vector<LaurentPolynomial>> m(n, std::vector<LaurentPolynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = LaurentPolynomial::monomial(v(i, j), 1) - LaurentPolynomial::constant(v(j, i));
    return determinant(std::move(m)).alexander_normalized();
}

LaurentPolynomial alexander_from_presentation(const OrientedDiagram& od) {
    if (!od.is_knot()) throw PreconditionError("Alexander polynomial requires a knot diagram");
    const Diagram& d = od.diagram;
    const int n = d.crossing_count();
    if (n == 0) return LaurentPolynomial::constant(1);
    // Generators are over-strands: arcs glued through the over slots.
    std::vector<int> parent(d.arc_count() + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& x : d.crossings()) parent[find(x[1])] = find(x[3]);
    std::vector<int> gen_of(d.arc_count() + 1, -1);
    int gens = 0;
    for (int a = 1; a <= d.arc_count(); ++a)
        if (gen_of[find(a)] < 0) gen_of[find(a)] = gens++;
    if (gens != n) throw InconsistencyError("over-strand count differs from crossing count");

    using L = LaurentPolynomial;
    const L t = L::monomial(1, 1), one = L::constant(1);
    std::vector<std::vector<L>> m(n, std::vector<L>(n));
    for (int c = 0; c < n; ++c) {
        const auto& x = d.crossings()[c];
        const int k = gen_of[find(x[1])], i = gen_of[find(x[0])], j = gen_of[find(x[2])];
        m[c][k] = m[c][k] + one - t;
        m[c][i] = m[c][i] + (od.signs[c] > 0 ? t : -one);
        m[c][j] = m[c][j] + (od.signs[c] > 0 ? -one : t);
    }
    m.pop_back();
    for (auto& row : m) row.pop_back();
    return determinant(std::move(m)).alexander_normalized();
}

LaurentPolynomial alexander(const OrientedDiagram& od) {
    if (od.is_knot() && classify_special(od).is_special) return alexander_from_seifert(seifert_matrix_special(od));
    return alexander_from_presentation(od);
}

bool is_prime_power(Int n) {
    if (n < 0) n = -n;
    if (n < 2) return false;
    Int p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) return true;  // n itself is prime
    while (n % p == 0) n /= p;
    return n == 1;
}

InvariantBundle bundle(const OrientedDiagram& od) {
    if (!od.is_knot()) throw PreconditionError("invariants require a knot diagram");
    const SpecialityReport rep = classify_special(od);
    InvariantBundle b;
    b.signature = gl_signature(od);
    const LaurentPolynomial general = alexander_from_presentation(od);
    b.alexander = general;
    if (rep.is_special) {
        b.alexander = alexander_from_seifert(seifert_matrix_special(od));
        if (b.alexander != general) throw InconsistencyError("Seifert and presentation Alexander polynomials differ");
    }
    if (b.alexander.evaluate(1) != 1) throw InconsistencyError("Alexander polynomial does not satisfy Δ(1) = 1");
    const BigInt at_minus_one = b.alexander.evaluate(-1);
    b.determinant = to_int(at_minus_one < 0 ? BigInt(-at_minus_one) : at_minus_one);
    b.genus = seifert_stats(od).genus;
    b.leading_coeff = b.alexander.leading_coefficient();
    const Int lc = b.leading_coeff < 0 ? -b.leading_coeff : b.leading_coeff;
    if (rep.is_alternating) b.fibered_alternating = lc == 1;
    b.leading_coeff_prime_power = is_prime_power(lc);

    if (rep.special_alternating()) {
        const int abs_sigma = b.signature < 0 ? -b.signature : b.signature;
        if (abs_sigma != 2 * b.genus || b.alexander.span() != 2 * b.genus)
            throw InconsistencyError("special alternating identity |σ| = 2g = span(Δ) fails");
    }
    return b;
}

}  // namespace bandprime
