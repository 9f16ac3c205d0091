#pragma once

// Simple undirected graphs, neighborhoods, clustering coefficient and the
// flag (clique) complex.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lochom/complex.hpp"
#include "lochom/error.hpp"
#include "lochom/exact_linalg.hpp"

namespace lochom {

using Edge = std::pair<VertexId, VertexId>;

class Graph {
public:
    Graph() = default;

    /// Deduplicates pairs and orients them u < v. Vertex count is
    /// `vertex_count` when given, otherwise one past the largest id.
    /// Loops are rejected.
    static Graph from_edge_list(const std::vector<Edge>& pairs, std::optional<std::size_t> vertex_count = {}) {
        std::size_t n = vertex_count.value_or(0);
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [u, v] : pairs) {
            if (u == v) throw MalformedInput("loop edge at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (vertex_count && v >= *vertex_count)
                throw MalformedInput("edge endpoint " + std::to_string(v) + " exceeds declared vertex count");
            n = std::max<std::size_t>(n, std::size_t{v} + 1);
            edges.emplace_back(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Graph g;
        g.adjacency_.assign(n, {});
        for (auto [u, v] : edges) {
            g.adjacency_[u].push_back(v);
            g.adjacency_[v].push_back(u);
        }
        for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
        g.edges_ = std::move(edges);
        return g;
    }

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    bool has_edge(VertexId u, VertexId v) const {
        if (u >= vertex_count() || v >= vertex_count()) return false;
        const auto& a = adjacency_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    /// Position of edge (u, v) in edges(), if present.
    std::optional<std::size_t> edge_index(VertexId u, VertexId v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    /// Subgraph induced by `vertices` (sorted, distinct); vertex i of the
    /// result is vertices[i].
    Graph induced(std::span<const VertexId> vertices) const {
        std::vector<Edge> pairs;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (has_edge(vertices[i], vertices[j]))
                    pairs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        return from_edge_list(pairs, vertices.size());
    }

    void require_vertex(VertexId v) const {
        if (v >= vertex_count()) throw PreconditionError("unknown vertex " + std::to_string(v));
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<Edge> edges_;
};

/// N(v): subgraph induced by the neighbors of v. Vertex i of the result is
/// the i-th neighbor of v in ascending order.
inline Graph open_neighborhood(const Graph& g, VertexId v) {
    g.require_vertex(v);
    return g.induced(g.neighbors(v));
}

/// Closed neighborhood: induced on v and its neighbors, ascending.
inline Graph closed_neighborhood(const Graph& g, VertexId v) {
    g.require_vertex(v);
    std::vector<VertexId> vs(g.neighbors(v).begin(), g.neighbors(v).end());
    vs.insert(std::upper_bound(vs.begin(), vs.end(), v), v);
    return g.induced(vs);
}

inline std::size_t connected_components(const Graph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t count = 0;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++count;
        std::queue<VertexId> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (VertexId w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return count;
}

inline bool is_connected(const Graph& g) { return connected_components(g) <= 1; }

/// CC(v) = |E(N(v))| / C(deg v, 2), and 0 when deg v < 2.
inline Rational clustering_coefficient(const Graph& g, VertexId v) {
    g.require_vertex(v);
    const auto d = g.degree(v);
    if (d < 2) return Rational(0);
    const auto nb = g.neighbors(v);
    std::size_t links = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) ++links;
    return Rational(static_cast<long>(2 * links), static_cast<long>(d * (d - 1)));
}

namespace detail {

inline void bron_kerbosch_pivot(const Graph& g, std::vector<VertexId>& clique, std::vector<VertexId> candidates,
                                std::vector<VertexId> excluded, std::vector<std::vector<VertexId>>& out) {
    if (candidates.empty() && excluded.empty()) {
        auto c = clique;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    // Pivot on the vertex of P u X with the most neighbors in P.
    VertexId pivot = candidates.empty() ? excluded.front() : candidates.front();
    std::size_t best = 0;
    for (const auto* pool : {&candidates, &excluded}) {
        for (VertexId u : *pool) {
            std::size_t hits = 0;
            for (VertexId w : candidates)
                if (g.has_edge(u, w)) ++hits;
            if (hits > best) {
                best = hits;
                pivot = u;
            }
        }
    }
    std::vector<VertexId> branch;
    for (VertexId w : candidates)
        if (!g.has_edge(pivot, w)) branch.push_back(w);
    for (VertexId v : branch) {
        std::vector<VertexId> p2, x2;
        for (VertexId w : candidates)
            if (g.has_edge(v, w)) p2.push_back(w);
        for (VertexId w : excluded)
            if (g.has_edge(v, w)) x2.push_back(w);
        clique.push_back(v);
        bron_kerbosch_pivot(g, clique, std::move(p2), std::move(x2), out);
        clique.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.push_back(v);
    }
}

/// Vertices in degeneracy order (repeatedly remove a minimum-degree vertex).
inline std::vector<VertexId> degeneracy_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::size_t maxdeg = 0;
    for (VertexId v = 0; v < n; ++v) maxdeg = std::max(maxdeg, deg[v] = g.degree(v));
    std::vector<std::vector<VertexId>> buckets(maxdeg + 1);
    for (VertexId v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
    std::vector<bool> removed(n, false);
    std::vector<VertexId> order;
    order.reserve(n);
    std::size_t d = 0;
    while (order.size() < n) {
        d = 0;
        while (buckets[d].empty()) ++d;
        const VertexId v = buckets[d].back();
        buckets[d].pop_back();
        if (removed[v] || deg[v] != d) continue;
        removed[v] = true;
        order.push_back(v);
        for (VertexId w : g.neighbors(v)) {
            if (removed[w]) continue;
            --deg[w];
            buckets[deg[w]].push_back(w);
        }
    }
    return order;
}

}  // namespace detail

/// Maximal cliques by Bron-Kerbosch with pivoting, seeded in degeneracy
/// order. Each clique is sorted; the list is lexicographic. Isolated
/// vertices are singleton cliques.
inline std::vector<std::vector<VertexId>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    const auto order = detail::degeneracy_order(g);
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    std::vector<VertexId> clique;
    for (VertexId v : order) {
        std::vector<VertexId> later, earlier;
        for (VertexId w : g.neighbors(v)) (position[w] > position[v] ? later : earlier).push_back(w);
        clique.assign(1, v);
        detail::bron_kerbosch_pivot(g, clique, std::move(later), std::move(earlier), out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Flag complex: maximal simplices are the maximal cliques. Vertex ids and
/// labels coincide with graph vertex ids.
inline SimplicialComplex flag_complex(const Graph& g) { return SimplicialComplex::from_ids(maximal_cliques(g)); }

/// The graph itself as a 1-dimensional complex (edges plus isolated vertices).
inline SimplicialComplex graph_complex(const Graph& g) {
    std::vector<std::vector<VertexId>> simplices;
    for (auto [u, v] : g.edges()) simplices.push_back({u, v});
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) simplices.push_back({v});
    return SimplicialComplex::from_ids(simplices);
}

/// 1-skeleton of a set of simplices as a graph on the complex's vertex ids.
inline Graph one_skeleton(const SimplexSet& A, std::size_t vertex_count) {
    std::vector<Edge> pairs;
    for (const auto& s : A)
        if (s.size() == 2) pairs.emplace_back(s[0], s[1]);
    return Graph::from_edge_list(pairs, vertex_count);
}

}  // namespace lochom
