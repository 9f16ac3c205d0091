#pragma once

// Bundled and generated graphs. Generators are seeded and use only
// std::mt19937_64 plus in-house range reduction, so a seed gives the same
// graph on every platform.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lochom/graph.hpp"
#include "lochom/io.hpp"

namespace lochom {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform real in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Zachary's karate club, 34 vertices and 78 edges, 0-based ids.
inline Graph karate_graph() {
    static const std::vector<Edge> edges = {
        {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},   {0, 10},  {0, 11},
        {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},  {1, 2},   {1, 3},   {1, 7},   {1, 13},
        {1, 17},  {1, 19},  {1, 21},  {1, 30},  {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},
        {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
        {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33}, {15, 32}, {15, 33},
        {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32}, {22, 33}, {23, 25}, {23, 27}, {23, 29},
        {23, 32}, {23, 33}, {24, 25}, {24, 27}, {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31},
        {28, 33}, {29, 32}, {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33},
    };
    return Graph::from_edge_list(edges, 34);
}

struct KarateSpec {};
struct ErdosRenyiSpec {
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
};
struct BarabasiAlbertSpec {
    std::size_t n = 0;
    std::size_t attach = 0;
    std::uint64_t seed = 0;
};
struct PlanarGridSpec {
    std::size_t width = 0;
    std::size_t height = 0;
    double diagonal_probability = 0.5;
    std::uint64_t seed = 0;
};
struct FileSpec {
    std::string path;
};

using DatasetSpec = std::variant<KarateSpec, ErdosRenyiSpec, BarabasiAlbertSpec, PlanarGridSpec, FileSpec>;

inline constexpr int kMaxConnectRetries = 1000;

/// Uniform G(n, m): m distinct edges drawn from all C(n, 2) pairs. With
/// `connected`, draws are repeated (continuing the same stream) until the
/// graph is connected.
inline Graph erdos_renyi(const ErdosRenyiSpec& spec, bool connected = true) {
    const auto n = spec.n;
    const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (spec.m > pairs) throw PreconditionError("G(n, m) needs m <= n(n-1)/2");
    Rng rng(spec.seed);
    for (int attempt = 0; attempt < kMaxConnectRetries; ++attempt) {
        std::set<Edge> chosen;
        while (chosen.size() < spec.m) {
            const auto u = static_cast<VertexId>(rng.below(n));
            const auto v = static_cast<VertexId>(rng.below(n));
            if (u == v) continue;
            chosen.insert({std::min(u, v), std::max(u, v)});
        }
        auto g = Graph::from_edge_list({chosen.begin(), chosen.end()}, n);
        if (!connected || is_connected(g)) return g;
    }
    throw PreconditionError("could not draw a connected G(n, m) graph; m is too small");
}

/// Preferential attachment: `attach` initial isolated vertices, then each
/// new vertex joins `attach` distinct targets drawn proportionally to degree
/// (the first new vertex joins all initial ones). Edge count is
/// attach * (n - attach); the result is connected.
inline Graph barabasi_albert(const BarabasiAlbertSpec& spec) {
    const auto n = spec.n;
    const auto m = spec.attach;
    if (m < 1 || m >= n) throw PreconditionError("preferential attachment needs 1 <= attach < n");
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    std::vector<VertexId> targets;
    for (std::size_t i = 0; i < m; ++i) targets.push_back(static_cast<VertexId>(i));
    std::vector<VertexId> repeated;
    for (auto source = static_cast<VertexId>(m); source < n; ++source) {
        for (VertexId t : targets) edges.emplace_back(t, source);
        repeated.insert(repeated.end(), targets.begin(), targets.end());
        repeated.insert(repeated.end(), m, source);
        std::set<VertexId> next;
        while (next.size() < m) next.insert(repeated[rng.below(repeated.size())]);
        targets.assign(next.begin(), next.end());
    }
    return Graph::from_edge_list(edges, n);
}

/// width x height grid; each unit square independently gets one of its two
/// diagonals with the given probability. Planar by construction.
inline Graph planar_grid(const PlanarGridSpec& spec) {
    if (spec.width == 0 || spec.height == 0) throw PreconditionError("grid needs positive width and height");
    if (!(spec.diagonal_probability >= 0.0 && spec.diagonal_probability <= 1.0))
        throw PreconditionError("diagonal probability must lie in [0, 1]");
    Rng rng(spec.seed);
    const auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * spec.width + c); };
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < spec.height; ++r) {
        for (std::size_t c = 0; c < spec.width; ++c) {
            if (c + 1 < spec.width) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < spec.height) edges.emplace_back(id(r, c), id(r + 1, c));
            if (c + 1 < spec.width && r + 1 < spec.height && rng.unit() < spec.diagonal_probability) {
                if (rng.below(2) == 0)
                    edges.emplace_back(id(r, c), id(r + 1, c + 1));
                else
                    edges.emplace_back(id(r, c + 1), id(r + 1, c));
            }
        }
    }
    return Graph::from_edge_list(edges, spec.width * spec.height);
}

inline Graph generate(const DatasetSpec& spec) {
    struct Visitor {
        Graph operator()(const KarateSpec&) const { return karate_graph(); }
        Graph operator()(const ErdosRenyiSpec& s) const { return erdos_renyi(s); }
        Graph operator()(const BarabasiAlbertSpec& s) const { return barabasi_albert(s); }
        Graph operator()(const PlanarGridSpec& s) const { return planar_grid(s); }
        Graph operator()(const FileSpec& s) const { return read_edge_list_file(s.path); }
    };
    return std::visit(Visitor{}, spec);
}

}  // namespace lochom
