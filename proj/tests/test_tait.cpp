#include <doctest.h>

#include <random>

#include "bandprime/diagram.hpp"
#include "bandprime/tait.hpp"
#include "oracles.hpp"

using namespace bandprime;

namespace {

const char* kTrefoil = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)";

TaitGraph color_with_faces(const Checkerboard& cb, std::size_t faces) {
    for (Color c : {Color::black, Color::white})
        if (cb.faces_of(c).size() == faces) return tait_graph(cb, c);
    FAIL("no color with " << faces << " faces");
    return {};
}

TaitGraph graph(int v, std::vector<std::pair<int, int>> es) {
    TaitGraph g;
    g.vertex_count = v;
    for (auto [a, b] : es) g.edges.push_back({a, b, 1, -1});
    return g;
}

}  // namespace

TEST_CASE("trefoil Tait graphs") {
    const auto cb = checkerboard(parse_pd(kTrefoil));
    const TaitGraph tri = color_with_faces(cb, 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.cycle_rank() == 1);
    CHECK(flow_lattice(tri).gram == IntMatrix{{3}});
    const TaitGraph theta = color_with_faces(cb, 2);
    CHECK(theta.edge_count() == 3);
    const GramForm f = flow_lattice(theta);
    CHECK(f.rank() == 2);
    CHECK(f.determinant() == 3);
    CHECK(f.gram(0, 0) == 2);
    CHECK(f.gram(1, 1) == 2);
    CHECK((f.gram(0, 1) == 1 || f.gram(0, 1) == -1));
    // Alternating: one sign per color class, opposite between classes.
    for (const auto& e : tri.edges) CHECK(e.sign == tri.edges[0].sign);
    for (const auto& e : theta.edges) CHECK(e.sign == -tri.edges[0].sign);
}

TEST_CASE("unknot Tait graph") {
    const TaitGraph g = tait_graph(checkerboard(parse_pd("")), Color::black);
    CHECK(g.vertex_count == 1);
    CHECK(g.edge_count() == 0);
    CHECK(flow_lattice(g).rank() == 0);
    CHECK(blocks(g).blocks.empty());
}

TEST_CASE("block decomposition examples") {
    const auto bouquet = blocks(graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}));
    CHECK(bouquet.articulation == std::vector<int>{0});
    CHECK(bouquet.blocks.size() == 2);
    CHECK(bouquet.cycle_rank == std::vector<int>{1, 1});
    const auto theta = blocks(graph(2, {{0, 1}, {0, 1}, {1, 0}}));
    CHECK(theta.articulation.empty());
    CHECK(theta.blocks.size() == 1);
    CHECK(theta.cycle_rank == std::vector<int>{2});
    const auto path = blocks(graph(3, {{0, 1}, {1, 2}}));
    CHECK(path.articulation == std::vector<int>{1});
    CHECK(path.cycle_rank == std::vector<int>{0, 0});
    const auto loops = blocks(graph(1, {{0, 0}, {0, 0}}));
    CHECK(loops.blocks.size() == 2);
    CHECK(loops.cycle_rank == std::vector<int>{1, 1});
    CHECK(loops.articulation == std::vector<int>{0});
}

TEST_CASE("loops give norm-one cycles") {
    const GramForm f = flow_lattice(graph(2, {{0, 1}, {1, 1}}));
    CHECK(f.gram == IntMatrix{{1}});
}

TEST_CASE("flow lattice determinant counts spanning trees") {
    std::mt19937 rng(7);
    for (int i = 0; i < 400; ++i) {
        const TaitGraph g = oracle::random_planar_multigraph(rng, 8);
        const GramForm f = flow_lattice(g);
        CHECK(f.rank() == static_cast<std::size_t>(g.cycle_rank()));
        CHECK(f.gram.symmetric());
        CHECK(f.determinant() == oracle::spanning_tree_count(g));
        CHECK(flow_lattice(g, TreeStrategy::dfs_highest).determinant() == f.determinant());
    }
}

TEST_CASE("blocks partition the edges") {
    std::mt19937 rng(11);
    for (int i = 0; i < 400; ++i) {
        const TaitGraph g = oracle::random_planar_multigraph(rng, 10);
        const auto b = blocks(g);
        std::vector<int> seen(g.edge_count(), 0);
        int rank_sum = 0;
        for (std::size_t k = 0; k < b.blocks.size(); ++k) {
            for (int e : b.blocks[k]) ++seen[e];
            rank_sum += b.cycle_rank[k];
        }
        for (int s : seen) CHECK(s == 1);
        CHECK(rank_sum == g.cycle_rank());
        // Every fundamental cycle stays inside one block.
        for (const auto& cyc : fundamental_cycles(g)) {
            int owner = -1;
            for (std::size_t k = 0; k < b.blocks.size(); ++k)
                for (int e : b.blocks[k])
                    if (cyc[e] != 0) {
                        if (owner < 0) owner = static_cast<int>(k);
                        CHECK(owner == static_cast<int>(k));
                    }
        }
    }
}
