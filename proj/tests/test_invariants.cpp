#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lochom;
using Catch::Approx;

namespace {

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(e, n);
}

Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId v = 1; v < n; ++v) e.emplace_back(v - 1, v);
    return Graph::from_edge_list(e, n);
}

}  // namespace

TEST_CASE("degree centrality") {
    for (double x : degree_centrality(complete(4)).values) CHECK(x == 1.0);
    const auto star = degree_centrality(Graph::from_edge_list({{0, 1}, {0, 2}, {0, 3}, {0, 4}})).values;
    CHECK(star[0] == 1.0);
    CHECK(star[3] == 0.25);
    CHECK(degree_centrality(path(3)).values == std::vector<double>{0.5, 1.0, 0.5});
    CHECK_THROWS_AS(degree_centrality(Graph::from_edge_list({}, 1)), PreconditionError);
}

TEST_CASE("closeness centrality") {
    for (double x : closeness_centrality(complete(5)).values) CHECK(x == 1.0);
    const auto p3 = closeness_centrality(path(3)).values;
    CHECK(p3[1] == 1.0);
    CHECK(p3[0] == Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(closeness_centrality(path(5)).values[2] == Approx(4.0 / 6.0).epsilon(1e-12));
    CHECK_THROWS_AS(closeness_centrality(Graph::from_edge_list({{0, 1}, {2, 3}})), DisconnectedGraphError);
}

TEST_CASE("betweenness") {
    CHECK(betweenness_vertex(path(3)).values == std::vector<double>{0.0, 1.0, 0.0});
    for (double x : betweenness_vertex(complete(5)).values) CHECK(x == 0.0);
    const auto c4 = betweenness_edge(Graph::from_edge_list({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    for (double x : c4.values) CHECK(x == Approx(c4.values.front()));
    CHECK(c4.values.front() == Approx(2.0));

    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = 2 + rng.below(7);
        const auto g = trial % 3 ? testing::random_connected_graph(rng, n, rng.below(10))
                                 : Graph::from_edge_list({{0, 1}}, n);  // disconnected is allowed here
        const auto expect = oracle::betweenness(g);
        const auto v = betweenness_vertex(g).values;
        for (std::size_t i = 0; i < n; ++i) CHECK(v[i] == Approx(expect.vertex[i]).margin(1e-12));
        const auto e = betweenness_edge(g);
        for (std::size_t i = 0; i < e.edges.size(); ++i) CHECK(e.values[i] == Approx(expect.edge.at(e.edges[i])).margin(1e-12));
        for (double x : v) CHECK(x >= 0.0);
    }
}

TEST_CASE("random walk betweenness") {
    const auto p3 = random_walk_betweenness(path(3)).values;
    CHECK(p3[1] > p3[0]);
    CHECK(p3[1] > p3[2]);
    const auto k3 = random_walk_betweenness(complete(3)).values;
    CHECK(k3[0] == Approx(k3[1]));
    CHECK(k3[1] == Approx(k3[2]));

    const auto chord = Graph::from_edge_list({{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    const auto got = random_walk_betweenness(chord).values;
    const auto expect = oracle::current_flow_betweenness(chord);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == Approx(expect[i]).epsilon(1e-10));

    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = testing::random_connected_graph(rng, 2 + rng.below(12), rng.below(15));
        const auto a = random_walk_betweenness(g).values;
        const auto b = oracle::current_flow_betweenness(g);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i] == Approx(b[i]).epsilon(1e-9));
            CHECK(a[i] >= 0.0);
        }
    }
    CHECK_THROWS_AS(random_walk_betweenness(Graph::from_edge_list({{0, 1}}, 3)), DisconnectedGraphError);
}

TEST_CASE("maximal clique counts and clustering scores") {
    for (double x : maximal_clique_count(complete(3)).values) CHECK(x == 1.0);
    CHECK(maximal_clique_count(path(3)).values[1] == 2.0);
    for (double x : maximal_clique_count(fixtures::starcl_graph()).values) CHECK(x == 1.0);
    const auto cc = clustering_scores(Graph::from_edge_list({{0, 1}, {0, 2}, {0, 3}, {1, 2}})).values;
    CHECK(cc[0] == Approx(1.0 / 3.0));
    CHECK(cc[3] == 0.0);
}

TEST_CASE("vertex invariants in reporting order") {
    const auto all = vertex_invariants(karate_graph());
    REQUIRE(all.size() == 6);
    const std::vector<std::string> names{"degree_centrality",       "closeness_centrality", "betweenness_vertex",
                                         "random_walk_betweenness", "maximal_clique_count", "clustering_coefficient"};
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].name == names[i]);
        CHECK(all[i].values.size() == 34);
        for (double x : all[i].values) CHECK(std::isfinite(x));
    }
}

TEST_CASE("score CSV export") {
    std::ostringstream v, e;
    write_scores_csv(v, degree_centrality(path(3)));
    CHECK(v.str() == "vertex,score\n0,0.5\n1,1\n2,0.5\n");
    write_scores_csv(e, betweenness_edge(path(3)));
    CHECK(e.str() == "u,v,score\n0,1,2\n1,2,2\n");
}
