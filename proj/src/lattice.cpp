#include "bandprime/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "bandprime/error.hpp"

namespace bandprime {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::flow_lattice: return "flow_lattice";
        case Provenance::goeritz: return "goeritz";
        case Provenance::seifert_symmetrized: return "seifert_symmetrized";
        case Provenance::none: break;
    }
    return "none";
}

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive_definite";
        case Definiteness::negative_definite: return "negative_definite";
        case Definiteness::indefinite: return "indefinite";
        case Definiteness::degenerate: break;
    }
    return "degenerate";
}

GramForm::GramForm(IntMatrix g, Provenance p, bool neg) : gram(std::move(g)), provenance(p), negated(neg) {
    if (!gram.square() || !gram.symmetric()) throw PreconditionError("Gram matrix must be square and symmetric");
}

GramForm GramForm::operator-() const { return GramForm(-gram, provenance, !negated); }

Inertia inertia(const IntMatrix& q) {
    if (!q.square()) throw PreconditionError("inertia of a non-square matrix");
    const std::size_t n = q.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = q(i, j);

    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };

    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][p] == 0) ++p;
        if (p == n) {
            // No diagonal pivot: replace e_i by e_i + e_j for some a_ij != 0, giving a_ii = 2 a_ij.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                out.zero += static_cast<int>(n - k);
                break;
            }
            for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
            for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
            p = pi;
        }
        swap_index(k, p);
        const Rational pivot = a[k][k];
        (pivot > 0 ? out.positive : out.negative) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            a[k][i] = 0;
            for (std::size_t j = k + 1; j < n; ++j) a[j][i] = a[i][j];
        }
    }
    return out;
}

Definiteness definiteness(const GramForm& q) {
    const Inertia in = inertia(q.gram);
    if (in.zero > 0) return Definiteness::degenerate;
    if (in.negative == 0) return Definiteness::positive_definite;
    if (in.positive == 0) return Definiteness::negative_definite;
    return Definiteness::indefinite;
}

int signature(const GramForm& q) {
    const Inertia in = inertia(q.gram);
    if (in.zero > 0) throw PreconditionError("signature of a degenerate form");
    return in.positive - in.negative;
}

namespace {

Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("integer overflow in lattice arithmetic");
    return r;
}

Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw ResourceError("integer overflow in lattice arithmetic");
    return r;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void require_positive_definite(const GramForm& q, const LatticeOptions& opt, const char* what) {
    if (q.rank() > opt.rank_cap)
        throw ResourceError(std::string(what) + ": rank " + std::to_string(q.rank()) + " exceeds cap " +
                            std::to_string(opt.rank_cap));
    if (definiteness(q) != Definiteness::positive_definite)
        throw PreconditionError(std::string(what) + " requires a positive definite form");
}

std::vector<Int> mat_vec(const IntMatrix& q, const std::vector<Int>& x) {
    std::vector<Int> out(q.rows(), 0);
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) out[i] = checked_add(out[i], checked_mul(q(i, j), x[j]));
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

// Basis of the integer span of the given vectors, in row echelon form.
std::vector<std::vector<Int>> span_basis(const std::vector<std::vector<Int>>& gens, std::size_t n) {
    std::vector<std::vector<BigInt>> rows;
    for (const auto& g : gens) rows.emplace_back(g.begin(), g.end());
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            while (rows[i][col] != 0) {
                const BigInt q = rows[r][col] / rows[i][col];
                for (std::size_t c = 0; c < n; ++c) rows[r][c] -= q * rows[i][c];
                std::swap(rows[r], rows[i]);
            }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& v : rows[r]) v = -v;
        for (std::size_t k = 0; k < r; ++k) {
            BigInt q = rows[k][col] / rows[r][col];
            if (rows[k][col] < 0 && q * rows[r][col] != rows[k][col]) q -= 1;
            for (std::size_t c = 0; c < n; ++c) rows[k][c] -= q * rows[r][c];
        }
        ++r;
    }
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> v;
        for (const auto& x : rows[i]) v.push_back(to_int(x));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Reduction greedy_reduce(const IntMatrix& q) {
    const std::size_t n = q.rows();
    Reduction r{IntMatrix::identity(n), IntMatrix::identity(n), q};
    IntMatrix& g = r.gram;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || g(j, j) <= 0) continue;
                const Int m = floor_div(checked_add(2 * g(i, j), g(j, j)), 2 * g(j, j));
                if (m == 0) continue;
                const Int norm = checked_add(checked_add(g(i, i), -2 * checked_mul(m, g(i, j))),
                                             checked_mul(checked_mul(m, m), g(j, j)));
                if (norm >= g(i, i)) continue;
                // b_i <- b_i - m b_j
                for (std::size_t k = 0; k < n; ++k)
                    if (k != i) g(i, k) = g(k, i) = checked_add(g(i, k), -checked_mul(m, g(j, k)));
                g(i, i) = norm;
                for (std::size_t k = 0; k < n; ++k) {
                    r.basis(k, i) = checked_add(r.basis(k, i), -checked_mul(m, r.basis(k, j)));
                    r.inverse(j, k) = checked_add(r.inverse(j, k), checked_mul(m, r.inverse(i, k)));
                }
                changed = true;
            }
    }
    // Sort the basis by norm.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g(a, a) < g(b, b); });
    IntMatrix perm(n, n);
    for (std::size_t k = 0; k < n; ++k) perm(order[k], k) = 1;
    r.basis = r.basis * perm;
    r.inverse = perm.transpose() * r.inverse;
    r.gram = q.congruent(r.basis);
    if (r.basis * r.inverse != IntMatrix::identity(n)) throw InconsistencyError("reduction lost track of its inverse");
    return r;
}

std::vector<std::vector<Int>> short_vectors(const IntMatrix& q, Int bound, const LatticeOptions& opt) {
    const std::size_t n = q.rows();
    std::vector<std::vector<Int>> out;
    if (n == 0 || bound <= 0) return out;

    // Q(x) = sum_i c[i][i] (x_i + sum_{j>i} c[i][j] x_j)^2
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) c[i][j] = q(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i][i] <= 0) throw PreconditionError("short vector enumeration requires a positive definite form");
        for (std::size_t j = i + 1; j < n; ++j) {
            c[j][i] = c[i][j];
            c[i][j] /= c[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) c[k][l] -= c[k][i] * c[i][l];
    }

    std::vector<Int> x(n, 0);
    std::uint64_t nodes = 0;
    auto visit = [&](auto&& self, std::size_t level, const Rational& remaining) -> void {
        if (++nodes > opt.search_budget) throw ResourceError("short vector enumeration exceeded its search budget");
        Rational center = 0;
        for (std::size_t j = level + 1; j < n; ++j) center -= c[level][j] * x[j];
        const double radius = std::sqrt(static_cast<double>(remaining / c[level][level]));
        const double mid = static_cast<double>(center);
        const Int lo = static_cast<Int>(std::floor(mid - radius)) - 1;
        const Int hi = static_cast<Int>(std::ceil(mid + radius)) + 1;
        for (Int v = lo; v <= hi; ++v) {
            const Rational d = Rational(v) - center;
            const Rational used = c[level][level] * d * d;
            if (used > remaining) continue;
            x[level] = v;
            if (level == 0) {
                const auto nz = std::find_if(x.begin(), x.end(), [](Int t) { return t != 0; });
                if (nz != x.end() && *nz > 0) out.push_back(x);
            } else {
                self(self, level - 1, remaining - used);
            }
        }
        x[level] = 0;
    };
    visit(visit, n - 1, Rational(bound));

    std::vector<std::pair<Int, std::vector<Int>>> keyed;
    for (auto& v : out) keyed.emplace_back(bilinear(q, v, v), std::move(v));
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [norm, v] : keyed) out.push_back(std::move(v));
    return out;
}

IntMatrix Decomposition::block_gram() const {
    std::size_t n = 0;
    for (const auto& s : summands) n += s.rank();
    IntMatrix m(n, n);
    std::size_t off = 0;
    for (const auto& s : summands) {
        for (std::size_t i = 0; i < s.rank(); ++i)
            for (std::size_t j = 0; j < s.rank(); ++j) m(off + i, off + j) = s.gram(i, j);
        off += s.rank();
    }
    return m;
}

bool verify_decomposition(const GramForm& q, const Decomposition& d) {
    if (d.witness.rows() != q.rank() || d.witness.cols() != q.rank()) return false;
    const BigInt det = determinant(d.witness);
    if (det != 1 && det != -1) return false;
    return q.gram.congruent(d.witness) == d.block_gram();
}

Decomposition indecomposable_summands(const GramForm& q, const LatticeOptions& opt) {
    require_positive_definite(q, opt, "indecomposable_summands");
    const std::size_t n = q.rank();
    Decomposition out;
    if (n == 0) return out;

    const Reduction red = greedy_reduce(q.gram);
    Int bound = 0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, red.gram(i, i));
    const auto vs = short_vectors(red.gram, bound, opt);

    std::vector<Int> norms;
    std::vector<std::vector<Int>> images;
    for (const auto& v : vs) {
        images.push_back(mat_vec(red.gram, v));
        norms.push_back(dot(images.back(), v));
    }

    // v splits as x + (v - x) with the parts orthogonal iff x·v = x·x for some shorter x.
    std::vector<std::size_t> indec;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        bool split = false;
        for (std::size_t j = 0; j < vs.size() && 2 * norms[j] <= norms[i] && !split; ++j) {
            const Int p = dot(images[j], vs[i]);
            split = (p == norms[j] || p == -norms[j]);
        }
        if (!split) indec.push_back(i);
    }

    std::vector<std::size_t> parent(indec.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t a = 0; a < indec.size(); ++a)
        for (std::size_t b = a + 1; b < indec.size(); ++b)
            if (dot(images[indec[a]], vs[indec[b]]) != 0) parent[find(a)] = find(b);

    std::map<std::size_t, std::vector<std::vector<Int>>> clusters;  // keyed by first member
    std::map<std::size_t, std::size_t> first_of_root;
    for (std::size_t a = 0; a < indec.size(); ++a) {
        const std::size_t root = find(a);
        const std::size_t key = first_of_root.emplace(root, a).first->second;
        clusters[key].push_back(vs[indec[a]]);
    }

    IntMatrix w(n, n);
    std::size_t col = 0;
    std::vector<std::size_t> sizes;
    for (const auto& [key, gens] : clusters) {
        const auto basis = span_basis(gens, n);
        if (col + basis.size() > n) throw InconsistencyError("indecomposable clusters overlap");
        for (const auto& b : basis) {
            for (std::size_t i = 0; i < n; ++i) w(i, col) = b[i];
            ++col;
        }
        sizes.push_back(basis.size());
    }
    if (col != n) throw InconsistencyError("indecomposable vectors do not span the lattice");

    out.witness = red.basis * w;
    const IntMatrix block = q.gram.congruent(out.witness);
    std::size_t off = 0;
    for (std::size_t s : sizes) {
        IntMatrix g(s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) g(i, j) = block(off + i, off + j);
        out.summands.emplace_back(std::move(g), q.provenance, q.negated);
        off += s;
    }
    if (!verify_decomposition(q, out)) throw InconsistencyError("decomposition witness failed verification");
    return out;
}

bool verify_isometry(const IntMatrix& q1, const IntMatrix& q2, const IntMatrix& u) {
    if (!q1.square() || q1.rows() != q2.rows() || u.rows() != q1.rows() || u.cols() != q2.rows()) return false;
    const BigInt det = determinant(u);
    return (det == 1 || det == -1) && q1.congruent(u) == q2;
}

std::optional<IntMatrix> isometry(const GramForm& q1, const GramForm& q2, const LatticeOptions& opt) {
    require_positive_definite(q1, opt, "isometry");
    require_positive_definite(q2, opt, "isometry");
    const std::size_t n = q1.rank();
    if (q2.rank() != n || q1.determinant() != q2.determinant()) return std::nullopt;
    if (n == 0) return IntMatrix{};

    const Reduction r1 = greedy_reduce(q1.gram);
    const Reduction r2 = greedy_reduce(q2.gram);
    const IntMatrix& g1 = r1.gram;
    const IntMatrix& g2 = r2.gram;
    Int bound = 0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, g2(i, i));

    std::map<Int, std::vector<std::vector<Int>>> by_norm;
    for (const auto& v : short_vectors(g1, bound, opt)) {
        const Int norm = bilinear(g1, v, v);
        std::vector<Int> neg(v.size());
        std::transform(v.begin(), v.end(), neg.begin(), [](Int t) { return -t; });
        by_norm[norm].push_back(v);
        by_norm[norm].push_back(std::move(neg));
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!by_norm.count(g2(j, j))) return std::nullopt;

    std::vector<const std::vector<Int>*> chosen(n, nullptr);
    std::vector<std::vector<Int>> images(n);
    std::uint64_t nodes = 0;
    auto search = [&](auto&& self, std::size_t j) -> bool {
        if (j == n) return true;
        for (const auto& cand : by_norm.at(g2(j, j))) {
            if (++nodes > opt.search_budget) throw ResourceError("isometry search exceeded its budget");
            // -U works whenever U does, so the first column may be taken up to sign.
            if (j == 0 && *std::find_if(cand.begin(), cand.end(), [](Int t) { return t != 0; }) < 0) continue;
            bool ok = true;
            for (std::size_t i = 0; i < j && ok; ++i) ok = dot(images[i], cand) == g2(i, j);
            if (!ok) continue;
            chosen[j] = &cand;
            images[j] = mat_vec(g1, cand);
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;

    IntMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = (*chosen[j])[i];
    IntMatrix witness = r1.basis * u * r2.inverse;
    if (!verify_isometry(q1.gram, q2.gram, witness)) throw InconsistencyError("isometry witness failed verification");
    return witness;
}

bool isometric(const GramForm& q1, const GramForm& q2, const LatticeOptions& opt) {
    return isometry(q1, q2, opt).has_value();
}

}  // namespace bandprime
