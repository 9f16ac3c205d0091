#pragma once

// Relative chain complexes, Betti numbers (global, relative, reduced, local)
// and maps induced on local homology by inclusions of open sets.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "lochom/complex.hpp"
#include "lochom/error.hpp"
#include "lochom/exact_linalg.hpp"

namespace lochom {

/// Betti numbers beta_0 .. beta_d of some (relative) homology.
struct BettiVector {
    std::vector<std::size_t> values;

    std::size_t size() const { return values.size(); }
    std::size_t operator[](std::size_t k) const { return k < values.size() ? values[k] : 0; }
    bool all_zero() const {
        return std::all_of(values.begin(), values.end(), [](std::size_t b) { return b == 0; });
    }
    long euler_characteristic() const {
        long chi = 0;
        for (std::size_t k = 0; k < values.size(); ++k)
            chi += (k % 2 ? -1L : 1L) * static_cast<long>(values[k]);
        return chi;
    }
    std::string to_string() const {
        std::string out = "(";
        for (std::size_t k = 0; k < values.size(); ++k) out += (k ? ", " : "") + std::to_string(values[k]);
        return out + ")";
    }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Relative chain complex C(A, B) for closed sets B within A.
///
/// basis[k] lists the k-simplices of A not in B (lexicographic); boundary[k]
/// maps basis[k] to basis[k-1], with boundary[0] the zero map to a
/// zero-dimensional space.
struct ChainComplexRep {
    std::vector<std::vector<Simplex>> basis;
    std::vector<ExactMatrix> boundary;

    int top_dim() const { return static_cast<int>(basis.size()) - 1; }

    std::size_t rank_of(int k) const {
        if (k < 0 || k > top_dim()) return 0;
        return basis[static_cast<std::size_t>(k)].size();
    }

    /// Position of `s` in basis[k], or npos-like size() when absent.
    std::size_t index_of(const Simplex& s) const {
        const auto k = static_cast<std::size_t>(s.dim());
        if (k >= basis.size()) return static_cast<std::size_t>(-1);
        const auto& b = basis[k];
        auto it = std::lower_bound(b.begin(), b.end(), s);
        return (it != b.end() && *it == s) ? static_cast<std::size_t>(it - b.begin())
                                           : static_cast<std::size_t>(-1);
    }
};

/// Builds C(ambient, excluded). `ambient` must be closed and `excluded` a
/// closed subset of it; the result has dimensions 0..top_dim regardless of
/// how many of them are empty.
inline ChainComplexRep chain_complex_of_pair(const SimplexSet& ambient, const SimplexSet& excluded, int top_dim) {
    ChainComplexRep C;
    const auto levels = static_cast<std::size_t>(std::max(top_dim, -1) + 1);
    C.basis.assign(levels, {});
    for (const auto& s : ambient) {
        if (excluded.contains(s)) continue;
        const auto k = static_cast<std::size_t>(s.dim());
        if (k >= levels) throw std::invalid_argument("simplex above requested top dimension");
        C.basis[k].push_back(s);
    }
    for (auto& b : C.basis) std::sort(b.begin(), b.end());

    C.boundary.reserve(levels);
    for (std::size_t k = 0; k < levels; ++k) {
        if (k == 0) {
            C.boundary.emplace_back(0, C.basis[0].size());
            continue;
        }
        std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
        for (std::size_t i = 0; i < C.basis[k - 1].size(); ++i) row_of.emplace(C.basis[k - 1][i], i);
        ExactMatrix d(C.basis[k - 1].size(), 0);
        for (const auto& s : C.basis[k]) {
            SparseVector col;
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto it = row_of.find(s.facet(i));
                // Faces in the excluded subcomplex contribute nothing.
                if (it == row_of.end()) continue;
                col.emplace_back(it->second, Rational(i % 2 ? -1 : 1));
            }
            std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            d.push_column(std::move(col));
        }
        C.boundary.push_back(std::move(d));
    }
    return C;
}

/// C(X, Y) for a subcomplex Y of X.
inline ChainComplexRep relative_chain_complex(const SimplicialComplex& X, const SimplexSet& Y) {
    if (!is_subset_of_complex(X, Y)) throw UnknownSimplexError("excluded set contains simplices outside the complex");
    if (!is_closed(X, Y)) throw NotClosedError("excluded set must be a subcomplex");
    return chain_complex_of_pair(X.all_simplices(), Y, X.dim());
}

/// beta_k = |basis_k| - rank d_k - rank d_{k+1}.
inline BettiVector betti(const ChainComplexRep& C, const LinalgOptions& options = {}) {
    const auto levels = C.basis.size();
    std::vector<std::size_t> ranks(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) ranks[k] = rank(C.boundary[k], options);
    BettiVector out;
    out.values.resize(levels);
    for (std::size_t k = 0; k < levels; ++k) out.values[k] = C.basis[k].size() - ranks[k] - ranks[k + 1];
    return out;
}

inline BettiVector relative_betti(const SimplicialComplex& X, const SimplexSet& Y, const LinalgOptions& options = {}) {
    return betti(relative_chain_complex(X, Y), options);
}

inline BettiVector global_betti(const SimplicialComplex& X, const LinalgOptions& options = {}) {
    return betti(chain_complex_of_pair(X.all_simplices(), {}, X.dim()), options);
}

inline void require_open(const SimplicialComplex& X, const SimplexSet& U) {
    if (!is_subset_of_complex(X, U)) throw UnknownSimplexError("open set contains simplices outside the complex");
    if (!is_open(X, U)) throw NotOpenError();
}

/// Excised chain complex C(cl U, fr U); its basis is exactly U.
inline ChainComplexRep local_chain_complex(const SimplicialComplex& X, const SimplexSet& U) {
    require_open(X, U);
    return chain_complex_of_pair(closure(X, U), frontier(X, U), X.dim());
}

/// Local Betti numbers dim H_k(X, X \ U) of an open set, computed on the
/// finite pair (cl U, fr U).
inline BettiVector local_betti(const SimplicialComplex& X, const SimplexSet& U, const LinalgOptions& options = {}) {
    return betti(local_chain_complex(X, U), options);
}

/// Same quantity as local_betti, computed on the whole complex relative to
/// the complement of U without excision.
inline BettiVector local_betti_direct(const SimplicialComplex& X, const SimplexSet& U,
                                      const LinalgOptions& options = {}) {
    require_open(X, U);
    return betti(chain_complex_of_pair(X.all_simplices(), complement(X, U), X.dim()), options);
}

inline BettiVector local_betti_at(const SimplicialComplex& X, const Simplex& s, const LinalgOptions& options = {}) {
    if (!X.contains(s)) throw UnknownSimplexError("simplex " + X.format(s) + " is not a face of the complex");
    return local_betti(X, X.star_of(s), options);
}

/// Reduced Betti numbers over a field: beta_0 drops by one.
inline BettiVector reduced_betti(const SimplicialComplex& X, const LinalgOptions& options = {}) {
    if (X.empty()) throw PreconditionError("reduced homology of the empty complex is undefined");
    auto b = global_betti(X, options);
    b.values[0] -= 1;
    return b;
}

/// Cycle representatives of H_k(X, X \ U) for every k, in the coordinates of
/// `basis` (the simplices of U per dimension).
struct HomologyBasis {
    std::vector<std::vector<Simplex>> basis;
    std::vector<std::vector<RationalVector>> cycles;

    std::size_t dimension(int k) const {
        return k >= 0 && static_cast<std::size_t>(k) < cycles.size() ? cycles[static_cast<std::size_t>(k)].size() : 0;
    }
};

namespace detail {

inline std::vector<RationalVector> homology_representatives(const ChainComplexRep& C, int k) {
    const auto uk = static_cast<std::size_t>(k);
    std::vector<RationalVector> cycles;
    if (uk >= C.basis.size()) return cycles;
    const std::size_t n = C.basis[uk].size();
    if (k == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            RationalVector e(n, Rational(0));
            e[i] = 1;
            cycles.push_back(std::move(e));
        }
    } else {
        cycles = kernel_basis(C.boundary[uk]);
    }
    ColumnSpace boundaries(false);
    if (uk + 1 < C.basis.size())
        for (std::size_t c = 0; c < C.boundary[uk + 1].cols(); ++c) boundaries.add(C.boundary[uk + 1].column(c));
    std::vector<RationalVector> reps;
    for (auto& z : cycles)
        if (boundaries.add(to_sparse(z))) reps.push_back(std::move(z));
    return reps;
}

}  // namespace detail

inline HomologyBasis homology_basis(const SimplicialComplex& X, const SimplexSet& U) {
    const auto C = local_chain_complex(X, U);
    HomologyBasis out;
    out.basis = C.basis;
    for (int k = 0; k <= C.top_dim(); ++k) out.cycles.push_back(detail::homology_representatives(C, k));
    return out;
}

/// Matrix of H_k(X, X \ U) -> H_k(X, X \ V) for open V inside U, in the
/// representative bases produced by homology_basis (columns: source classes,
/// rows: target classes).
///
/// On chains the map deletes the simplices of U \ V. Each projected
/// representative is written in the target's cycle coordinates by solving
/// against [target representatives | image of d_{k+1}].
inline ExactMatrix induced_map(const SimplicialComplex& X, const SimplexSet& U, const SimplexSet& V, int k) {
    if (k < 0) throw PreconditionError("homology degree must be non-negative");
    require_open(X, U);
    require_open(X, V);
    if (!V.is_subset_of(U)) throw PreconditionError("induced map needs V contained in U");
    const auto CU = local_chain_complex(X, U);
    const auto CV = local_chain_complex(X, V);
    const auto source = detail::homology_representatives(CU, k);
    const auto target = detail::homology_representatives(CV, k);
    ExactMatrix out(target.size(), source.size());
    if (source.empty() || target.empty()) return out;

    const auto uk = static_cast<std::size_t>(k);
    const auto& target_basis = CV.basis[uk];
    ExactMatrix system(target_basis.size(), 0);
    for (const auto& h : target) system.push_column(to_sparse(h));
    if (uk + 1 < CV.basis.size())
        for (std::size_t c = 0; c < CV.boundary[uk + 1].cols(); ++c) system.push_column(CV.boundary[uk + 1].column(c));

    for (std::size_t j = 0; j < source.size(); ++j) {
        RationalVector projected(target_basis.size(), Rational(0));
        for (std::size_t i = 0; i < target_basis.size(); ++i) {
            const auto src = CU.index_of(target_basis[i]);
            projected[i] = source[j][src];
        }
        const auto x = solve_in_image(system, projected);
        if (!x) throw std::logic_error("projected cycle is not a relative cycle of the target pair");
        for (std::size_t i = 0; i < target.size(); ++i) out.set(i, j, (*x)[i]);
    }
    return out;
}

inline std::size_t induced_map_rank(const SimplicialComplex& X, const SimplexSet& U, const SimplexSet& V, int k,
                                    const LinalgOptions& options = {}) {
    return rank(induced_map(X, U, V, k), options);
}

/// Middle term of H(U u V) -> H(U) + H(V) -> H(U n V) at degree k.
struct MayerVietorisMiddle {
    std::size_t kernel;  ///< dim ker of (a, -b) on H_k(U) + H_k(V)
    std::size_t image;   ///< rank of (p, q) from H_k(U u V)
    bool exact() const { return kernel == image; }
};

inline MayerVietorisMiddle mayer_vietoris_middle(const SimplicialComplex& X, const SimplexSet& U, const SimplexSet& V,
                                                 int k, const LinalgOptions& options = {}) {
    const auto I = set_intersection(U, V);
    const auto J = set_union(U, V);
    const auto a = induced_map(X, U, I, k);
    const auto b = induced_map(X, V, I, k);
    const auto p = induced_map(X, J, U, k);
    const auto q = induced_map(X, J, V, k);

    ExactMatrix diff(a.rows(), 0);
    for (std::size_t c = 0; c < a.cols(); ++c) diff.push_column(a.column(c));
    for (std::size_t c = 0; c < b.cols(); ++c) {
        auto col = b.column(c);
        for (auto& e : col) e.second = -e.second;
        diff.push_column(col);
    }
    ExactMatrix stacked(p.rows() + q.rows(), p.cols());
    for (std::size_t c = 0; c < p.cols(); ++c) {
        for (const auto& [r, x] : p.column(c)) stacked.set(r, c, x);
        for (const auto& [r, x] : q.column(c)) stacked.set(p.rows() + r, c, x);
    }
    return {diff.cols() - rank(diff, options), rank(stacked, options)};
}

/// Dimension of the kernel of H_k(X, X \ U) -> product over s in U of
/// H_k(X, X \ star s).
inline std::size_t joint_restriction_kernel(const SimplicialComplex& X, const SimplexSet& U, int k,
                                            const LinalgOptions& options = {}) {
    const auto beta = local_betti(X, U, options)[static_cast<std::size_t>(k)];
    if (beta == 0) return 0;
    std::vector<ExactMatrix> blocks;
    std::size_t total = 0;
    for (const auto& s : U.sorted()) {
        blocks.push_back(induced_map(X, U, X.star_of(s), k));
        total += blocks.back().rows();
    }
    ExactMatrix joint(total, beta);
    std::size_t offset = 0;
    for (const auto& m : blocks) {
        for (std::size_t c = 0; c < beta; ++c)
            for (const auto& [r, x] : m.column(c)) joint.set(offset + r, c, x);
        offset += m.rows();
    }
    return beta - rank(joint, options);
}

}  // namespace lochom
