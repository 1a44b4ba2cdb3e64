#pragma once

// Independent reference computations used only by the tests.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bandprime/diagram.hpp"
#include "bandprime/matrix.hpp"
#include "bandprime/tait.hpp"

namespace oracle {

// One passage of a Gauss code: crossing number (1-based) and whether the strand goes over.
struct Passage {
    int crossing;
    bool over;
};

// Builds a PD code by walking a signed Gauss code: arcs are numbered 1..2n along the strand.
std::vector<std::array<int, 4>> pd_from_gauss(const std::vector<Passage>& code, const std::vector<int>& signs);

// Number of spanning trees by enumerating every (V-1)-subset of non-loop edges.
long long spanning_tree_count(const bandprime::TaitGraph& g);

// Random connected planar multigraph (loops and parallel edges allowed).
bandprime::TaitGraph random_planar_multigraph(std::mt19937& rng, int max_edges);

// Random unimodular matrix built from elementary operations.
bandprime::IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 12);

// Signature by floating-point eigenvalues.
int eigen_signature(const bandprime::IntMatrix& q);

// All nonzero vectors of norm <= bound inside a box, one per sign pair.
std::vector<std::vector<bandprime::Int>> box_short_vectors(const bandprime::IntMatrix& q, bandprime::Int bound,
                                                          bandprime::Int box);

// Connected sum of two oriented diagrams: arc p of a is cut and joined to arc q of b.
std::vector<std::array<int, 4>> connected_sum_pd(const bandprime::Diagram& a, int p, const bandprime::Diagram& b, int q);

// Same diagram with crossings permuted and arc labels cyclically shifted.
std::vector<std::array<int, 4>> relabel(const bandprime::Diagram& d, std::mt19937& rng);

// Random alternating knot diagram built as a connected sum of corpus pieces with random mirrors.
bandprime::Diagram random_alternating_composite(const std::vector<bandprime::Diagram>& pieces, std::mt19937& rng,
                                                int summands);

std::vector<bandprime::Diagram> corpus_diagrams(const std::string& file);

}  // namespace oracle
