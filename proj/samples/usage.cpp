// Minimal library walk-through: local homology of a pinched complex and a
// correlation cell on the Karate graph.

#include <iostream>

#include <lochom/lochom.hpp>

int main() {
    using namespace lochom;

    const auto X = SimplicialComplex::from_maximal(
        std::vector<std::vector<Label>>{{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}});
    const Simplex ab({*X.find_label(Label{std::string("a")}), *X.find_label(Label{std::string("b")})});
    std::cout << "local Betti at " << X.format(ab) << ':';
    for (auto b : local_betti_at(X, ab).values) std::cout << ' ' << b;
    std::cout << "\nclass: " << classify(X, ab, 2).to_string() << '\n';

    const auto g = karate_graph();
    const auto report = correlation_table(g, Subject::vertex, {0}, {1});
    std::cout << "rho(degree, beta_1(N_0)) = " << *report.find("degree_centrality", 1, 0)->rho << '\n';
}
