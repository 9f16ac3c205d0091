#pragma once

// Correlation study: Pearson tables of graph invariants against local Betti
// numbers of neighborhoods in the flag complex.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lochom/complex.hpp"
#include "lochom/graph.hpp"
#include "lochom/homology.hpp"
#include "lochom/invariants.hpp"
#include "lochom/io.hpp"
#include "lochom/local_analysis.hpp"
#include "lochom/parallel.hpp"

namespace lochom {

/// Sample Pearson correlation; nullopt when either side has zero variance.
inline std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw PreconditionError("pearson: length mismatch");
    if (x.size() < 2) throw PreconditionError("pearson: needs at least two samples");
    const auto n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    const double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

/// Mean of endpoint scores, per edge in Graph::edges() order.
inline EdgeScores edge_aggregate(const VertexScores& scores, const Graph& g) {
    if (scores.values.size() != g.vertex_count()) throw PreconditionError("edge_aggregate: score vector size mismatch");
    EdgeScores out{scores.name, g.edges(), {}};
    out.values.reserve(out.edges.size());
    for (auto [u, v] : out.edges) out.values.push_back(0.5 * (scores.values[u] + scores.values[v]));
    return out;
}

enum class Subject { vertex, edge };

inline std::string to_string(Subject s) { return s == Subject::vertex ? "vertex" : "edge"; }

struct CorrelationCell {
    std::string invariant;
    int k = 0;
    int m = 0;
    std::optional<double> rho;
    std::vector<double> x;  // invariant values
    std::vector<double> y;  // beta_k(N_m) values
};

struct CorrelationReport {
    Subject subject = Subject::vertex;
    std::vector<CorrelationCell> cells;  // invariant-major, then m, then k

    const CorrelationCell* find(const std::string& invariant, int k, int m) const {
        for (const auto& c : cells)
            if (c.invariant == invariant && c.k == k && c.m == m) return &c;
        return nullptr;
    }

    void write_csv(std::ostream& out) const {
        out << "invariant,beta_k,N_m,subject,rho\n";
        for (const auto& c : cells) {
            out << c.invariant << ',' << c.k << ',' << c.m << ',' << to_string(subject) << ',';
            if (c.rho) out << format_real(*c.rho);
            out << '\n';
        }
    }
};

inline void write_scatter_csv(std::ostream& out, const CorrelationCell& cell) {
    out << "x,y\n";
    for (std::size_t i = 0; i < cell.x.size(); ++i) out << format_real(cell.x[i]) << ',' << format_real(cell.y[i]) << '\n';
}

/// Local Betti vectors of N_0 .. N_{m_max} around each vertex (or edge) of
/// G, inside the flag complex of G. Row i follows vertex i or edges()[i].
inline std::vector<std::vector<BettiVector>> neighborhood_betti(const Graph& g, Subject subject, int m_max,
                                                                unsigned threads = 1) {
    const auto X = flag_complex(g);
    std::vector<Simplex> seeds;
    if (subject == Subject::vertex) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) seeds.push_back(Simplex::from_sorted({v}));
    } else {
        for (auto [u, v] : g.edges()) seeds.push_back(Simplex::from_sorted({u, v}));
    }
    const auto profiles = local_profiles(X, seeds, m_max, std::nullopt, threads);
    std::vector<std::vector<BettiVector>> out;
    out.reserve(profiles.size());
    for (const auto& p : profiles) out.push_back(p.levels);
    return out;
}

struct InvariantColumn {
    std::string name;
    std::vector<double> values;
};

inline std::vector<InvariantColumn> invariant_columns(const Graph& g, Subject subject) {
    std::vector<InvariantColumn> cols;
    for (auto& s : vertex_invariants(g)) {
        if (subject == Subject::vertex)
            cols.push_back({s.name, std::move(s.values)});
        else
            cols.push_back({s.name, edge_aggregate(s, g).values});
    }
    if (subject == Subject::edge) {
        auto eb = betweenness_edge(g);
        cols.push_back({eb.name, std::move(eb.values)});
    }
    return cols;
}

/// Pearson of every invariant against beta_k(N_m) for k in `ks`, m in `ms`.
inline CorrelationReport correlation_table(const Graph& g, Subject subject, const std::vector<int>& ms,
                                           const std::vector<int>& ks, unsigned threads = 1) {
    if (ms.empty() || ks.empty()) throw PreconditionError("correlation table needs at least one level and one degree");
    int m_max = 0;
    for (int m : ms) {
        if (m < 0) throw PreconditionError("neighborhood level must be non-negative");
        m_max = std::max(m_max, m);
    }
    for (int k : ks)
        if (k < 0) throw PreconditionError("homology degree must be non-negative");
    const auto cols = invariant_columns(g, subject);
    const auto betti = neighborhood_betti(g, subject, m_max, threads);
    if (betti.size() < 2) throw PreconditionError("correlation needs at least two subjects");

    CorrelationReport report{subject, {}};
    for (const auto& col : cols) {
        for (int m : ms) {
            for (int k : ks) {
                CorrelationCell cell{col.name, k, m, std::nullopt, col.values, {}};
                cell.y.reserve(betti.size());
                for (const auto& levels : betti)
                    cell.y.push_back(static_cast<double>(levels[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]));
                cell.rho = pearson(cell.x, cell.y);
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

}  // namespace lochom
