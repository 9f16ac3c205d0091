#pragma once

// Vertex and edge invariants of graphs used in the correlation study.

#include <charconv>
#include <cmath>
#include <ostream>
#include <cstddef>
#include <queue>
#include <stack>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lochom/graph.hpp"

namespace lochom {

struct VertexScores {
    std::string name;
    std::vector<double> values;
};

/// Scores keyed by the graph's canonical edge list (same order as Graph::edges()).
struct EdgeScores {
    std::string name;
    std::vector<Edge> edges;
    std::vector<double> values;
};

inline void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw DisconnectedGraphError(std::string(what) + " needs a connected graph");
}

/// deg(v) / (n - 1).
inline VertexScores degree_centrality(const Graph& g) {
    const auto n = g.vertex_count();
    if (n <= 1) throw PreconditionError("degree centrality needs at least two vertices");
    VertexScores s{"degree_centrality", std::vector<double>(n)};
    for (VertexId v = 0; v < n; ++v) s.values[v] = static_cast<double>(g.degree(v)) / static_cast<double>(n - 1);
    return s;
}

inline std::vector<std::size_t> bfs_distances(const Graph& g, VertexId source) {
    constexpr auto unreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(g.vertex_count(), unreached);
    std::queue<VertexId> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        const auto u = q.front();
        q.pop();
        for (VertexId w : g.neighbors(u))
            if (dist[w] == unreached) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

/// (n - 1) / sum of BFS distances.
inline VertexScores closeness_centrality(const Graph& g) {
    const auto n = g.vertex_count();
    if (n <= 1) throw PreconditionError("closeness centrality needs at least two vertices");
    require_connected(g, "closeness centrality");
    VertexScores s{"closeness_centrality", std::vector<double>(n)};
    for (VertexId v = 0; v < n; ++v) {
        std::size_t total = 0;
        for (auto d : bfs_distances(g, v)) total += d;
        s.values[v] = static_cast<double>(n - 1) / static_cast<double>(total);
    }
    return s;
}

namespace detail {

/// Brandes accumulation from every source. Both tallies count ordered
/// (source, target) pairs, so callers halve them for undirected graphs.
inline void brandes(const Graph& g, std::vector<double>& vertex, std::vector<double>& edge) {
    const auto n = g.vertex_count();
    vertex.assign(n, 0.0);
    edge.assign(g.edge_count(), 0.0);
    for (VertexId s = 0; s < n; ++s) {
        std::vector<std::vector<VertexId>> preds(n);
        std::vector<double> sigma(n, 0.0), delta(n, 0.0);
        std::vector<long> dist(n, -1);
        std::stack<VertexId> order;
        std::queue<VertexId> q;
        sigma[s] = 1.0;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            order.push(v);
            for (VertexId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        while (!order.empty()) {
            const auto w = order.top();
            order.pop();
            for (VertexId v : preds[w]) {
                const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
                edge[*g.edge_index(v, w)] += c;
                delta[v] += c;
            }
            if (w != s) vertex[w] += delta[w];
        }
    }
}

}  // namespace detail

/// Fraction of shortest paths through v, summed over unordered pairs of
/// other vertices (raw, unnormalized).
inline VertexScores betweenness_vertex(const Graph& g) {
    std::vector<double> vertex, edge;
    detail::brandes(g, vertex, edge);
    for (auto& x : vertex) x /= 2.0;
    return {"betweenness_vertex", std::move(vertex)};
}

inline EdgeScores betweenness_edge(const Graph& g) {
    std::vector<double> vertex, edge;
    detail::brandes(g, vertex, edge);
    for (auto& x : edge) x /= 2.0;
    return {"betweenness_edge", g.edges(), std::move(edge)};
}

/// Current-flow (random walk) betweenness.
///
/// With the Laplacian grounded at the last vertex and inverted, a unit
/// current from s to t sets potentials V = T e_s - T e_t. The current through
/// v is half the sum of |V_v - V_w| over its neighbors w, and 1 when v is
/// the source or sink. Scores are averaged over all n(n-1)/2 pairs.
inline VertexScores random_walk_betweenness(const Graph& g) {
    const auto n = g.vertex_count();
    if (n <= 1) throw PreconditionError("random walk betweenness needs at least two vertices");
    require_connected(g, "random walk betweenness");
    const auto m = static_cast<Eigen::Index>(n - 1);
    Eigen::MatrixXd reduced = Eigen::MatrixXd::Zero(m, m);
    for (VertexId v = 0; v + 1 < n; ++v) {
        reduced(v, v) = static_cast<double>(g.degree(v));
        for (VertexId w : g.neighbors(v))
            if (w + 1 < n) reduced(v, w) = -1.0;
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    T.topLeftCorner(m, m) = reduced.partialPivLu().inverse();

    std::vector<double> score(n, 0.0);
    Eigen::VectorXd potential(static_cast<Eigen::Index>(n));
    for (VertexId s = 0; s < n; ++s) {
        for (VertexId t = s + 1; t < n; ++t) {
            potential = T.col(s) - T.col(t);
            for (VertexId v = 0; v < n; ++v) {
                if (v == s || v == t) {
                    score[v] += 1.0;
                    continue;
                }
                double through = 0.0;
                for (VertexId w : g.neighbors(v)) through += std::abs(potential(v) - potential(w));
                score[v] += 0.5 * through;
            }
        }
    }
    const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    for (auto& x : score) x /= pairs;
    return {"random_walk_betweenness", std::move(score)};
}

/// Number of maximal cliques containing each vertex.
inline VertexScores maximal_clique_count(const Graph& g) {
    VertexScores s{"maximal_clique_count", std::vector<double>(g.vertex_count(), 0.0)};
    for (const auto& c : maximal_cliques(g))
        for (VertexId v : c) s.values[v] += 1.0;
    return s;
}

inline VertexScores clustering_scores(const Graph& g) {
    VertexScores s{"clustering_coefficient", std::vector<double>(g.vertex_count())};
    for (VertexId v = 0; v < g.vertex_count(); ++v) s.values[v] = clustering_coefficient(g, v).convert_to<double>();
    return s;
}

namespace detail {

/// Shortest decimal text that round-trips.
inline std::string shortest(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, res.ptr};
}

}  // namespace detail

inline void write_scores_csv(std::ostream& out, const VertexScores& s) {
    out << "vertex,score\n";
    for (std::size_t v = 0; v < s.values.size(); ++v) out << v << ',' << detail::shortest(s.values[v]) << '\n';
}

inline void write_scores_csv(std::ostream& out, const EdgeScores& s) {
    out << "u,v,score\n";
    for (std::size_t i = 0; i < s.edges.size(); ++i)
        out << s.edges[i].first << ',' << s.edges[i].second << ',' << detail::shortest(s.values[i]) << '\n';
}

/// The six vertex invariants in reporting order.
inline std::vector<VertexScores> vertex_invariants(const Graph& g) {
    return {degree_centrality(g),       closeness_centrality(g),  betweenness_vertex(g),
            random_walk_betweenness(g), maximal_clique_count(g), clustering_scores(g)};
}

}  // namespace lochom
