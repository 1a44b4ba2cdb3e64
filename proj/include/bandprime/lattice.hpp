#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bandprime/matrix.hpp"

namespace bandprime {

enum class Provenance { none, flow_lattice, goeritz, seifert_symmetrized };
const char* to_string(Provenance p);

/// Symmetric integer bilinear form.
struct GramForm {
    IntMatrix gram;
    Provenance provenance = Provenance::none;
    // Set when the geometric form is the negative of `gram`.
    bool negated = false;

    GramForm() = default;
    explicit GramForm(IntMatrix g, Provenance p = Provenance::none, bool neg = false);

    std::size_t rank() const noexcept { return gram.rows(); }
    BigInt determinant() const { return bandprime::determinant(gram); }
    /// The form with every entry negated (and the sign flag toggled).
    GramForm operator-() const;
};

enum class Definiteness { positive_definite, negative_definite, indefinite, degenerate };
const char* to_string(Definiteness d);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

/// Exact inertia by congruence diagonalization over the rationals.
Inertia inertia(const IntMatrix& q);
Definiteness definiteness(const GramForm& q);
/// Throws PreconditionError on degenerate input.
int signature(const GramForm& q);

struct LatticeOptions {
    std::size_t rank_cap = 12;
    std::uint64_t search_budget = 20'000'000;  // enumeration / backtracking nodes
};

/// Basis change T (columns are the new basis) with its inverse and the reduced Gram Tᵀ·q·T.
struct Reduction {
    IntMatrix basis;
    IntMatrix inverse;
    IntMatrix gram;
};

/// Pairwise (Gauss-style) reduction of a positive definite Gram matrix.
Reduction greedy_reduce(const IntMatrix& q);

/// All nonzero x with xᵀ·q·x <= bound, one of each pair ±x (first nonzero entry positive),
/// sorted by norm then lexicographically. q must be positive definite.
std::vector<std::vector<Int>> short_vectors(const IntMatrix& q, Int bound, const LatticeOptions& opt = {});

struct Decomposition {
    std::vector<GramForm> summands;
    IntMatrix witness;  // unimodular; witnessᵀ·q·witness is block diagonal in summand order

    IntMatrix block_gram() const;
};

/// Splits a positive definite lattice into its indecomposable orthogonal summands.
Decomposition indecomposable_summands(const GramForm& q, const LatticeOptions& opt = {});

/// Re-checks a decomposition witness against the original form.
bool verify_decomposition(const GramForm& q, const Decomposition& d);

/// An integer U with Uᵀ·q1·U = q2, if one exists. Both forms must be positive definite.
std::optional<IntMatrix> isometry(const GramForm& q1, const GramForm& q2, const LatticeOptions& opt = {});
bool isometric(const GramForm& q1, const GramForm& q2, const LatticeOptions& opt = {});

/// Checks a claimed isometry witness.
bool verify_isometry(const IntMatrix& q1, const IntMatrix& q2, const IntMatrix& u);

}  // namespace bandprime
