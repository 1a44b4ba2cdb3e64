#pragma once

#include <optional>
#include <vector>

#include "bandprime/diagram.hpp"
#include "bandprime/lattice.hpp"
#include "bandprime/polynomial.hpp"
#include "bandprime/tait.hpp"

namespace bandprime {

/// Goeritz form on the faces of `color` (first face deleted). Weights are the incidence
/// types seen from the other color, so the form is the reduced weighted Laplacian of that Tait graph.
GramForm goeritz_matrix(const Checkerboard& cb, Color color);

/// Signed count of the crossings whose oriented smoothing joins the two `color` corners.
int gl_correction(const OrientedDiagram& od, const Checkerboard& cb, Color color);

/// Signature from the Goeritz form and its correction term, computed for both colors;
/// throws InconsistencyError if they disagree.
int gl_signature(const OrientedDiagram& od);

struct SeifertData {
    Color color = Color::black;            // the orientable chessboard color
    TaitGraph graph;                       // its Tait graph
    std::vector<std::vector<Int>> cycles;  // basis of H1 as signed edge vectors
    IntMatrix matrix;                      // V(a, b) = lk(a, b+)
};

/// Seifert matrix of the orientable chessboard surface on a fundamental-cycle basis
/// (depth-first tree from the last vertex). Throws PreconditionError for non-special diagrams.
SeifertData seifert_data(const OrientedDiagram& od);
IntMatrix seifert_matrix_special(const OrientedDiagram& od);

/// det(tV - Vᵀ), normalized.
LaurentPolynomial alexander_from_seifert(const IntMatrix& v);
/// First elementary ideal generator of the crossing (Wirtinger) presentation, normalized.
LaurentPolynomial alexander_from_presentation(const OrientedDiagram& od);
/// Seifert backend for special diagrams, presentation backend otherwise.
LaurentPolynomial alexander(const OrientedDiagram& od);

bool is_prime_power(Int n);

struct InvariantBundle {
    int signature = 0;
    LaurentPolynomial alexander = LaurentPolynomial::constant(1);
    Int determinant = 1;
    int genus = 0;
    std::optional<bool> fibered_alternating;  // unset when the diagram is not alternating
    Int leading_coeff = 1;
    bool leading_coeff_prime_power = false;
};

/// All invariants above. For special alternating diagrams the identities
/// |signature| = 2 genus = span(alexander) and agreement of both Alexander backends are enforced.
InvariantBundle bundle(const OrientedDiagram& od);

}  // namespace bandprime
