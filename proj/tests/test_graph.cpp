#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lochom;

TEST_CASE("edge lists") {
    const auto p = Graph::from_edge_list({{0, 1}, {1, 2}});
    CHECK(p.vertex_count() == 3);
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(1) == 2);
    CHECK(p.degree(2) == 1);

    const auto e = Graph::from_edge_list({{0, 1}, {1, 0}});
    CHECK(e.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list({{2, 2}}), MalformedInput);
    CHECK_THROWS_AS(Graph::from_edge_list({{0, 5}}, 3), MalformedInput);

    const auto k = karate_graph();
    CHECK(k.vertex_count() == 34);
    CHECK(k.edge_count() == 78);
    CHECK(is_connected(k));
}

TEST_CASE("edge list text format") {
    std::istringstream in("# comment\nn=5\n0 1 # trailing\n\n1 2\n2 1\n");
    const auto g = read_edge_list(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(4) == 0);

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    CHECK(read_edge_list(back) == g);

    std::istringstream bad("0 1\n1 x\n");
    CHECK_THROWS_WITH(read_edge_list(bad), Catch::Matchers::ContainsSubstring("line 2"));
    std::istringstream three("0 1 2\n");
    CHECK_THROWS_AS(read_edge_list(three), MalformedInput);
    std::istringstream loop("3 3\n");
    CHECK_THROWS_AS(read_edge_list(loop), MalformedInput);
}

TEST_CASE("neighborhoods") {
    const auto g = fixtures::starcl_graph();
    const auto n = open_neighborhood(g, 0);
    CHECK(n.vertex_count() == 3);
    CHECK(n.edge_count() == 3);
    CHECK(closed_neighborhood(g, 0).edge_count() == 6);

    const auto iso = Graph::from_edge_list({{0, 1}}, 3);
    CHECK(open_neighborhood(iso, 2).vertex_count() == 0);

    const auto star_graph = Graph::from_edge_list({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto leaves = open_neighborhood(star_graph, 0);
    CHECK(leaves.vertex_count() == 4);
    CHECK(leaves.edge_count() == 0);

    CHECK_THROWS_AS(open_neighborhood(g, 9), PreconditionError);
}

TEST_CASE("clustering coefficient") {
    const auto tri = Graph::from_edge_list({{0, 1}, {1, 2}, {0, 2}});
    CHECK(clustering_coefficient(tri, 0) == 1);
    const auto path = Graph::from_edge_list({{0, 1}, {1, 2}});
    CHECK(clustering_coefficient(path, 1) == 0);
    CHECK(clustering_coefficient(path, 0) == 0);
    CHECK(clustering_coefficient(fixtures::starcl_graph(), 0) == 1);
    const auto g = Graph::from_edge_list({{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(clustering_coefficient(g, 0) == Rational(1, 3));
}

TEST_CASE("connected components") {
    CHECK(connected_components(Graph{}) == 0);
    CHECK(connected_components(Graph::from_edge_list({{0, 1}, {2, 3}})) == 2);
    CHECK(connected_components(Graph::from_edge_list({{0, 1}}, 4)) == 3);
}

TEST_CASE("flag complexes") {
    const auto tri = flag_complex(Graph::from_edge_list({{0, 1}, {1, 2}, {0, 2}}));
    CHECK(tri.maximal_simplices() == std::vector<Simplex>{Simplex({0, 1, 2})});

    const auto square = flag_complex(Graph::from_edge_list({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(square.maximal_simplices().size() == 4);
    CHECK(square.dim() == 1);

    const auto k4 = flag_complex(fixtures::starcl_graph());
    CHECK(k4.maximal_simplices() == std::vector<Simplex>{Simplex({0, 1, 2, 3})});
    CHECK(k4.dim() == 3);

    const auto iso = flag_complex(Graph::from_edge_list({{0, 1}}, 3));
    CHECK(iso.vertex_count() == 3);
    CHECK(iso.contains(Simplex({2})));
}

TEST_CASE("maximal cliques match brute force") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = 1 + rng.below(12);
        std::vector<Edge> edges;
        const auto density = 1 + rng.below(4);
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v)
                if (rng.below(5) < density) edges.emplace_back(u, v);
        const auto g = Graph::from_edge_list(edges, n);
        const auto cliques = maximal_cliques(g);
        CHECK(cliques == oracle::maximal_cliques(g));

        // no clique inside another, and every edge is covered
        for (std::size_t i = 0; i < cliques.size(); ++i)
            for (std::size_t j = 0; j < cliques.size(); ++j)
                if (i != j)
                    CHECK_FALSE(std::includes(cliques[j].begin(), cliques[j].end(), cliques[i].begin(),
                                              cliques[i].end()));
        std::set<Edge> covered;
        for (const auto& c : cliques)
            for (std::size_t a = 0; a < c.size(); ++a)
                for (std::size_t b = a + 1; b < c.size(); ++b) covered.insert({c[a], c[b]});
        CHECK(covered == std::set<Edge>(g.edges().begin(), g.edges().end()));

        // faces of the flag complex are exactly the cliques
        const auto X = flag_complex(g);
        for (const auto& s : X.all_simplices())
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b) CHECK(g.has_edge(s[a], s[b]));
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<VertexId> c;
            for (VertexId v = 0; v < n; ++v)
                if (mask >> v & 1) c.push_back(v);
            bool clique = true;
            for (std::size_t a = 0; a < c.size() && clique; ++a)
                for (std::size_t b = a + 1; b < c.size() && clique; ++b) clique = g.has_edge(c[a], c[b]);
            CHECK(X.contains(Simplex(c)) == clique);
        }

        // link and closed star recover the neighborhoods
        for (VertexId v = 0; v < n; ++v) {
            const SimplexSet sv{Simplex({v})};
            const auto lk = link(X, sv);
            std::vector<Edge> link_edges;
            for (const auto& s : lk)
                if (s.size() == 2) link_edges.emplace_back(s[0], s[1]);
            std::vector<Edge> nbr_edges;
            const auto nb = g.neighbors(v);
            const auto open = open_neighborhood(g, v);
            for (auto [a, b] : open.edges()) nbr_edges.emplace_back(nb[a], nb[b]);
            std::sort(link_edges.begin(), link_edges.end());
            CHECK(link_edges == nbr_edges);
            CHECK(vertex_set(lk) == std::vector<VertexId>(nb.begin(), nb.end()));

            const auto cs = one_skeleton(closure(X, star(X, sv)), n);
            std::vector<VertexId> closed(nb.begin(), nb.end());
            closed.push_back(v);
            std::sort(closed.begin(), closed.end());
            const auto closed_graph = closed_neighborhood(g, v);
            CHECK(cs.edge_count() == closed_graph.edge_count());
            for (auto [a, b] : closed_graph.edges()) CHECK(cs.has_edge(closed[a], closed[b]));
        }
    }
}
