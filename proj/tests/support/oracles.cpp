#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <Eigen/Dense>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "bandprime/corpus.hpp"

namespace oracle {

using bandprime::Int;
using bandprime::IntMatrix;
using bandprime::TaitGraph;
using bandprime::Diagram;
using bandprime::Endpoint;

std::vector<std::array<int, 4>> pd_from_gauss(const std::vector<Passage>& code, const std::vector<int>& signs) {
    const int m = static_cast<int>(code.size());
    struct Seen {
        int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    };
    std::vector<Seen> at(signs.size());
    for (int i = 0; i < m; ++i) {
        const int in = i + 1;
        const int out = (i + 1) % m + 1;
        Seen& s = at[code[i].crossing - 1];
        if (code[i].over) {
            s.over_in = in;
            s.over_out = out;
        } else {
            s.under_in = in;
            s.under_out = out;
        }
    }
    std::vector<std::array<int, 4>> pd;
    for (std::size_t c = 0; c < at.size(); ++c) {
        const Seen& s = at[c];
        if (signs[c] > 0)
            pd.push_back({s.under_in, s.over_out, s.under_out, s.over_in});
        else
            pd.push_back({s.under_in, s.over_in, s.under_out, s.over_out});
    }
    return pd;
}

long long spanning_tree_count(const TaitGraph& g) {
    std::vector<int> edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!g.edges[e].loop()) edges.push_back(e);
    const int k = g.vertex_count - 1;
    if (k == 0) return 1;
    if (static_cast<int>(edges.size()) < k) return 0;
    long long count = 0;
    std::vector<bool> pick(edges.size(), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
        std::vector<int> parent(g.vertex_count);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        bool acyclic = true;
        for (std::size_t i = 0; i < edges.size() && acyclic; ++i) {
            if (!pick[i]) continue;
            const int a = find(g.edges[edges[i]].tail), b = find(g.edges[edges[i]].head);
            if (a == b)
                acyclic = false;
            else
                parent[a] = b;
        }
        if (acyclic) ++count;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return count;
}

TaitGraph random_planar_multigraph(std::mt19937& rng, int max_edges) {
    using Simple = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    while (true) {
        const int e_count = std::uniform_int_distribution<int>(0, max_edges)(rng);
        const int v_max = std::min(e_count + 1, 8);
        const int v_count = std::uniform_int_distribution<int>(1, v_max)(rng);
        if (e_count < v_count - 1) continue;
        TaitGraph g;
        g.vertex_count = v_count;
        // A random spanning tree first keeps the graph connected.
        for (int v = 1; v < v_count; ++v) {
            const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
            g.edges.push_back({u, v, 1, -1});
        }
        std::uniform_int_distribution<int> pick(0, v_count - 1);
        while (g.edge_count() < e_count) g.edges.push_back({pick(rng), pick(rng), 1, -1});
        std::shuffle(g.edges.begin(), g.edges.end(), rng);
        for (auto& e : g.edges)
            if (rng() % 2) std::swap(e.tail, e.head);

        Simple s(v_count);
        std::set<std::pair<int, int>> seen;
        for (const auto& e : g.edges) {
            if (e.loop()) continue;
            auto key = std::minmax(e.tail, e.head);
            if (seen.insert(key).second) boost::add_edge(key.first, key.second, s);
        }
        if (boost::boyer_myrvold_planarity_test(s)) return g;
    }
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && rng() % 2) u(0, 0) = -1;
        return u;
    }
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const Int c = coef(rng);
        for (std::size_t r = 0; r < n; ++r) u(r, i) += c * u(r, j);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (rng() % 2)
            for (std::size_t r = 0; r < n; ++r) u(r, i) = -u(r, i);
    return u;
}

int eigen_signature(const IntMatrix& q) {
    const auto n = static_cast<Eigen::Index>(q.rows());
    if (n == 0) return 0;
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = static_cast<double>(q(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    int sig = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ev = solver.eigenvalues()(i);
        if (ev > 1e-9) ++sig;
        if (ev < -1e-9) --sig;
    }
    return sig;
}

std::vector<std::vector<Int>> box_short_vectors(const IntMatrix& q, Int bound, Int box) {
    const std::size_t n = q.rows();
    std::vector<std::vector<Int>> out;
    std::vector<Int> x(n, -box);
    while (true) {
        const auto nz = std::find_if(x.begin(), x.end(), [](Int t) { return t != 0; });
        if (nz != x.end() && *nz > 0 && bandprime::bilinear(q, x, x) <= bound) out.push_back(x);
        std::size_t i = 0;
        while (i < n && x[i] == box) x[i++] = -box;
        if (i == n) break;
        ++x[i];
    }
    return out;
}

std::vector<std::array<int, 4>> connected_sum_pd(const Diagram& a, int p, const Diagram& b, int q) {
    const int off = a.arc_count();
    auto xs = a.crossings();
    const Endpoint hA = a.head(p);
    const Endpoint tB = b.tail(q);
    for (int c = 0; c < b.crossing_count(); ++c) {
        std::array<int, 4> x = b.crossings()[c];
        for (int s = 0; s < 4; ++s) x[s] += off;
        xs.push_back(x);
    }
    // Arc p now runs from its old tail into the head of q; a new arc runs from the tail of q into hA.
    xs[a.crossing_count() + b.head(q).crossing][b.head(q).slot] = p;
    xs[hA.crossing][hA.slot] = q + off;
    xs[a.crossing_count() + tB.crossing][tB.slot] = q + off;
    return xs;
}

std::vector<std::array<int, 4>> relabel(const Diagram& d, std::mt19937& rng) {
    auto xs = d.crossings();
    const int m = d.arc_count();
    if (m == 0) return xs;
    const int k = std::uniform_int_distribution<int>(0, m - 1)(rng);
    for (auto& x : xs)
        for (int& l : x) l = (l - 1 + k) % m + 1;
    std::shuffle(xs.begin(), xs.end(), rng);
    return xs;
}

Diagram random_alternating_composite(const std::vector<Diagram>& pieces, std::mt19937& rng, int summands) {
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    auto piece = [&]() {
        Diagram d = pieces[pick(rng)];
        return rng() % 2 ? bandprime::mirror(d) : d;
    };
    Diagram acc = piece();
    for (int i = 1; i < summands; ++i) {
        const Diagram next = piece();
        const int p = std::uniform_int_distribution<int>(1, acc.arc_count())(rng);
        // Keep alternation: the old tail of p and the new head must have opposite parity.
        std::vector<int> ok;
        for (int q = 1; q <= next.arc_count(); ++q)
            if ((acc.tail(p).slot + next.head(q).slot) % 2 == 1) ok.push_back(q);
        const int q = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
        acc = Diagram(connected_sum_pd(acc, p, next, q));
    }
    return Diagram(relabel(acc, rng));
}

std::vector<Diagram> corpus_diagrams(const std::string& file) {
    std::vector<Diagram> out;
    for (const auto& e : bandprime::load_corpus(std::string(BANDPRIME_DATA_DIR) + "/" + file))
        out.push_back(bandprime::parse_pd(e.pd));
    return out;
}

}  // namespace oracle
