#include "bandprime/tait.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bandprime/error.hpp"

namespace bandprime {

namespace {

std::vector<std::vector<int>> incidence(const TaitGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        adj[g.edges[e].tail].push_back(e);
        if (!g.edges[e].loop()) adj[g.edges[e].head].push_back(e);
    }
    return adj;
}

int far_end(const TaitEdge& e, int v) { return e.tail == v ? e.head : e.tail; }

}  // namespace

bool TaitGraph::connected() const {
    if (vertex_count == 0) return true;
    const auto adj = incidence(*this);
    std::vector<bool> seen(vertex_count, false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int e : adj[queue[i]]) {
            const int w = far_end(edges[e], queue[i]);
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

TaitGraph tait_graph(const Checkerboard& cb, Color color) {
    TaitGraph g;
    g.color = color;
    g.faces = cb.faces_of(color);
    g.vertex_count = static_cast<int>(g.faces.size());
    std::map<int, int> vertex_of;
    for (int v = 0; v < g.vertex_count; ++v) vertex_of[g.faces[v]] = v;
    for (int c = 0; c < cb.diagram.crossing_count(); ++c) {
        const auto [t, h] = cb.incident_faces(c, color);
        g.edges.push_back({vertex_of.at(t), vertex_of.at(h), cb.twist_sign(c, color), c});
    }
    return g;
}

std::vector<std::vector<Int>> fundamental_cycles(const TaitGraph& g, TreeStrategy strategy) {
    if (!g.connected()) throw PreconditionError("cycle basis requires a connected graph");
    const int nv = g.vertex_count;
    std::vector<std::vector<Int>> cycles;
    if (nv == 0) return cycles;
    const auto adj = incidence(g);
    std::vector<int> parent_edge(nv, -1);
    std::vector<bool> seen(nv, false), tree(g.edge_count(), false);

    const int root = strategy == TreeStrategy::bfs_lowest ? 0 : nv - 1;
    seen[root] = true;
    if (strategy == TreeStrategy::bfs_lowest) {
        std::vector<int> queue{root};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int e : adj[queue[i]]) {
                const int w = far_end(g.edges[e], queue[i]);
                if (seen[w]) continue;
                seen[w] = true;
                parent_edge[w] = e;
                tree[e] = true;
                queue.push_back(w);
            }
    } else {
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i == adj[v].size()) {
                stack.pop_back();
                continue;
            }
            const int e = adj[v][i++];
            const int w = far_end(g.edges[e], v);
            if (seen[w]) continue;
            seen[w] = true;
            parent_edge[w] = e;
            tree[e] = true;
            stack.emplace_back(w, 0);
        }
    }

    // Signed path from v up to the root, as coefficients on tree edges.
    auto add_up_path = [&](std::vector<Int>& x, int v, Int scale) {
        while (parent_edge[v] >= 0) {
            const TaitEdge& te = g.edges[parent_edge[v]];
            x[parent_edge[v]] += scale * (te.tail == v ? 1 : -1);
            v = far_end(te, v);
        }
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (tree[e]) continue;
        std::vector<Int> x(g.edge_count(), 0);
        x[e] = 1;
        add_up_path(x, g.edges[e].head, 1);
        add_up_path(x, g.edges[e].tail, -1);
        cycles.push_back(std::move(x));
    }
    return cycles;
}

GramForm flow_lattice(const TaitGraph& g, TreeStrategy strategy) {
    const auto cycles = fundamental_cycles(g, strategy);
    const std::size_t r = cycles.size();
    IntMatrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Int s = 0;
            for (int e = 0; e < g.edge_count(); ++e) s += cycles[i][e] * cycles[j][e];
            gram(i, j) = s;
        }
    const bool negative = !g.edges.empty() &&
                          std::all_of(g.edges.begin(), g.edges.end(), [](const TaitEdge& e) { return e.sign < 0; });
    return GramForm(std::move(gram), Provenance::flow_lattice, negative);
}

int BlockDecomposition::positive_rank_blocks() const {
    return static_cast<int>(std::count_if(cycle_rank.begin(), cycle_rank.end(), [](int r) { return r > 0; }));
}

BlockDecomposition blocks(const TaitGraph& g) {
    if (!g.connected()) throw PreconditionError("block decomposition requires a connected graph");
    BlockDecomposition out;
    const int nv = g.vertex_count;
    const auto adj = incidence(g);
    std::vector<std::vector<int>> found;

    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edges[e].loop()) found.push_back({e});

    // Hopcroft–Tarjan with an explicit stack; edges are compared by id so parallel edges work.
    std::vector<int> disc(nv, -1), low(nv, 0);
    std::vector<int> edge_stack;
    int clock = 0;
    struct Frame {
        int v;
        int via;
        std::size_t next;
    };
    for (int s = 0; s < nv; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> stack{{s, -1, 0}};
        disc[s] = low[s] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                const int e = adj[f.v][f.next++];
                if (e == f.via || g.edges[e].loop()) continue;
                const int w = far_end(g.edges[e], f.v);
                if (disc[w] < 0) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = clock++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const int w = f.v, via = f.via;
            stack.pop_back();
            if (stack.empty()) break;
            const int v = stack.back().v;
            low[v] = std::min(low[v], low[w]);
            if (low[w] >= disc[v]) {
                std::vector<int> block;
                while (true) {
                    const int e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == via) break;
                }
                found.push_back(std::move(block));
            }
        }
    }

    for (auto& b : found) std::sort(b.begin(), b.end());
    std::sort(found.begin(), found.end());
    std::vector<int> block_count(nv, 0);
    for (auto& b : found) {
        std::set<int> verts;
        for (int e : b) {
            verts.insert(g.edges[e].tail);
            verts.insert(g.edges[e].head);
        }
        for (int v : verts) ++block_count[v];
        out.cycle_rank.push_back(static_cast<int>(b.size()) - static_cast<int>(verts.size()) + 1);
        out.block_vertices.emplace_back(verts.begin(), verts.end());
        out.blocks.push_back(std::move(b));
    }
    for (int v = 0; v < nv; ++v)
        if (block_count[v] >= 2) out.articulation.push_back(v);
    return out;
}

}  // namespace bandprime
