#pragma once

#include <vector>

#include "bandprime/diagram.hpp"
#include "bandprime/lattice.hpp"

namespace bandprime {

struct TaitEdge {
    int tail = 0;
    int head = 0;
    int sign = 1;
    int crossing = -1;  // -1 for graphs not built from a diagram

    bool loop() const noexcept { return tail == head; }
};

/// Signed planar multigraph of one checkerboard color: faces are vertices, crossings are edges.
struct TaitGraph {
    Color color = Color::black;
    int vertex_count = 0;
    std::vector<int> faces;  // vertex -> face index of the source diagram
    std::vector<TaitEdge> edges;

    int edge_count() const noexcept { return static_cast<int>(edges.size()); }
    int cycle_rank() const noexcept { return edge_count() - vertex_count + (vertex_count > 0 ? 1 : 0); }
    bool connected() const;
};

TaitGraph tait_graph(const Checkerboard& cb, Color color);

enum class TreeStrategy {
    bfs_lowest,  // breadth-first from vertex 0
    dfs_highest  // depth-first from the last vertex
};

/// Fundamental cycles of a spanning tree, as signed edge vectors (one per non-tree edge, in edge order).
std::vector<std::vector<Int>> fundamental_cycles(const TaitGraph& g, TreeStrategy strategy = TreeStrategy::bfs_lowest);

/// Gram matrix of the cycle basis under the standard edge inner product. `negated` is set when
/// every edge sign is negative, i.e. the signed pairing is the negative of the Gram.
GramForm flow_lattice(const TaitGraph& g, TreeStrategy strategy = TreeStrategy::bfs_lowest);

struct BlockDecomposition {
    std::vector<int> articulation;              // sorted vertex ids
    std::vector<std::vector<int>> blocks;       // edge ids, each sorted; blocks ordered by first edge
    std::vector<std::vector<int>> block_vertices;
    std::vector<int> cycle_rank;

    int positive_rank_blocks() const;
};

/// Biconnected components of a connected multigraph; each loop forms its own block.
BlockDecomposition blocks(const TaitGraph& g);

}  // namespace bandprime
