#pragma once

// Neighborhood filtrations, per-simplex local Betti profiles, generalized
// degree and stratification (homology-manifold) checks.

#include <optional>
#include <string>
#include <vector>

#include "lochom/complex.hpp"
#include "lochom/homology.hpp"
#include "lochom/parallel.hpp"

namespace lochom {

/// N_0(Y) = star Y, N_m(Y) = star cl N_{m-1}(Y).
inline SimplexSet neighborhood(const SimplicialComplex& X, const SimplexSet& Y, int m) {
    if (m < 0) throw PreconditionError("neighborhood level must be non-negative");
    auto level = star(X, Y);
    for (int i = 0; i < m; ++i) {
        auto next = star(X, closure(X, level));
        if (next.size() == level.size()) break;  // fixed point
        level = std::move(next);
    }
    return level;
}

struct NeighborhoodFiltration {
    SimplexSet seed;
    std::vector<SimplexSet> levels;  // levels[m] = N_m(seed)
};

inline NeighborhoodFiltration neighborhood_filtration(const SimplicialComplex& X, const SimplexSet& seed, int m_max) {
    if (m_max < 0) throw PreconditionError("neighborhood level must be non-negative");
    NeighborhoodFiltration f{seed, {}};
    f.levels.push_back(star(X, seed));
    for (int m = 1; m <= m_max; ++m) f.levels.push_back(star(X, closure(X, f.levels.back())));
    return f;
}

enum class StratumKind { manifold_interior, boundary_like, ramification };

struct Classification {
    StratumKind kind = StratumKind::ramification;
    int dimension = 0;  // meaningful for manifold_interior only

    std::string to_string() const {
        switch (kind) {
            case StratumKind::manifold_interior: return "manifold-interior(" + std::to_string(dimension) + ")";
            case StratumKind::boundary_like: return "boundary-like";
            case StratumKind::ramification: return "ramification";
        }
        return "ramification";
    }
    friend bool operator==(const Classification&, const Classification&) = default;
};

/// manifold-interior(n) when beta = delta_{k,n}, boundary-like when all zero,
/// ramification otherwise.
inline Classification classify_betti(const BettiVector& b, int n) {
    if (b.all_zero()) return {StratumKind::boundary_like, 0};
    bool interior = n >= 0;
    for (std::size_t k = 0; k < std::max<std::size_t>(b.size(), static_cast<std::size_t>(n) + 1); ++k)
        if (b[k] != (static_cast<int>(k) == n ? 1u : 0u)) interior = false;
    return interior ? Classification{StratumKind::manifold_interior, n} : Classification{StratumKind::ramification, 0};
}

inline Classification classify(const SimplicialComplex& X, const Simplex& s, int n,
                               const LinalgOptions& options = {}) {
    return classify_betti(local_betti_at(X, s, options), n);
}

struct LocalProfile {
    Simplex simplex;
    std::vector<BettiVector> levels;  // levels[m] = betti of H(X, X \ N_m)
    Classification classification;    // from levels[0]
};

inline LocalProfile local_profile(const SimplicialComplex& X, const Simplex& s, int m_max,
                                  std::optional<int> ambient_dim = {}, const LinalgOptions& options = {}) {
    if (!X.contains(s)) throw UnknownSimplexError("simplex " + X.format(s) + " is not a face of the complex");
    const auto filtration = neighborhood_filtration(X, SimplexSet{s}, m_max);
    LocalProfile p{s, {}, {}};
    for (const auto& level : filtration.levels) p.levels.push_back(local_betti(X, level, options));
    p.classification = classify_betti(p.levels.front(), ambient_dim.value_or(X.dim()));
    return p;
}

/// Profiles for many simplices in parallel; output order follows `simplices`.
inline std::vector<LocalProfile> local_profiles(const SimplicialComplex& X, const std::vector<Simplex>& simplices,
                                                int m_max, std::optional<int> ambient_dim = {}, unsigned threads = 1,
                                                const LinalgOptions& options = {}) {
    X.faces(0);  // warm the face memo before sharing
    return parallel_map(simplices.size(), threads, [&](std::size_t i) {
        return local_profile(X, simplices[i], m_max, ambient_dim, options);
    });
}

/// 1 + beta_1(star s).
inline std::size_t generalized_degree(const SimplicialComplex& X, const Simplex& s) {
    return 1 + local_betti_at(X, s)[1];
}

struct ManifoldCheck {
    bool is_manifold = true;
    std::vector<Simplex> ramification;  // every simplex whose local homology is not delta_{k,n}
};

inline ManifoldCheck is_homology_n_manifold(const SimplicialComplex& X, int n, unsigned threads = 1,
                                            const LinalgOptions& options = {}) {
    std::vector<Simplex> all;
    for (int k = 0; k <= X.dim(); ++k)
        for (const auto& f : X.faces(k)) all.push_back(f);
    std::sort(all.begin(), all.end());
    const auto kinds = parallel_map(all.size(), threads, [&](std::size_t i) { return classify(X, all[i], n, options); });
    ManifoldCheck out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (kinds[i].kind != StratumKind::manifold_interior) {
            out.is_manifold = false;
            out.ramification.push_back(all[i]);
        }
    }
    return out;
}

struct PersistenceStep {
    std::size_t betti = 0;                 // beta_k(N_m)
    std::optional<std::size_t> map_rank;   // rank of H_k(X, X \ N_{m+1}) -> H_k(X, X \ N_m); absent at the last level
};

/// beta_k along N_0 .. N_{m_max} around `s`, with ranks of the maps induced
/// by restricting from each level to the one below it.
inline std::vector<PersistenceStep> filtration_persistence(const SimplicialComplex& X, const Simplex& s, int k,
                                                           int m_max, const LinalgOptions& options = {}) {
    if (!X.contains(s)) throw UnknownSimplexError("simplex " + X.format(s) + " is not a face of the complex");
    const auto f = neighborhood_filtration(X, SimplexSet{s}, m_max);
    std::vector<PersistenceStep> out;
    for (std::size_t m = 0; m < f.levels.size(); ++m) {
        PersistenceStep step;
        step.betti = local_betti(X, f.levels[m], options)[static_cast<std::size_t>(k)];
        if (m + 1 < f.levels.size()) step.map_rank = induced_map_rank(X, f.levels[m + 1], f.levels[m], k, options);
        out.push_back(step);
    }
    return out;
}

}  // namespace lochom
