#pragma once

#include <string>
#include <vector>

#include "lochom/lochom.hpp"

namespace lochom::fixtures {

inline std::vector<std::vector<Label>> labelled(const std::vector<std::vector<std::string>>& simplices) {
    std::vector<std::vector<Label>> out;
    for (const auto& s : simplices) out.emplace_back(s.begin(), s.end());
    return out;
}

inline SimplicialComplex triangle() { return SimplicialComplex::from_maximal(labelled({{"a", "b", "c"}})); }

/// Boundary of the 3-simplex, a triangulated 2-sphere.
inline SimplicialComplex tetrahedron_boundary() {
    return SimplicialComplex::from_maximal(labelled({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}}));
}

/// Hollow triangle a-b-c-a.
inline SimplicialComplex circle() {
    return SimplicialComplex::from_maximal(labelled({{"a", "b"}, {"b", "c"}, {"a", "c"}}));
}

/// Annulus from two 8-cycles: inner ring 0..7, outer ring 8..15, 16 triangles.
inline SimplicialComplex annulus() {
    std::vector<std::vector<VertexId>> tris;
    for (VertexId i = 0; i < 8; ++i) {
        const VertexId j = (i + 1) % 8;
        tris.push_back({i, j, 8 + i});
        tris.push_back({j, 8 + i, 8 + j});
    }
    return SimplicialComplex::from_ids(tris);
}

/// The two boundary circles of annulus() with their vertices.
inline SimplexSet annulus_boundary() {
    SimplexSet out;
    for (VertexId i = 0; i < 8; ++i) {
        const VertexId j = (i + 1) % 8;
        out.insert(Simplex({i}));
        out.insert(Simplex({8 + i}));
        out.insert(Simplex({i, j}));
        out.insert(Simplex({8 + i, 8 + j}));
    }
    return out;
}

/// Three triangles sharing the edge [a,b].
inline SimplicialComplex three_triangles() {
    return SimplicialComplex::from_maximal(labelled({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}}));
}

/// Two hollow triangles joined at vertex o.
inline SimplicialComplex wedge_of_circles() {
    return SimplicialComplex::from_maximal(
        labelled({{"o", "a"}, {"a", "b"}, {"b", "o"}, {"o", "c"}, {"c", "d"}, {"d", "o"}}));
}

/// 3x3 grid on the torus with one diagonal per square: 9 vertices, 18 triangles.
inline SimplicialComplex torus() {
    const auto id = [](VertexId r, VertexId c) { return (r % 3) * 3 + (c % 3); };
    std::vector<std::vector<VertexId>> tris;
    for (VertexId r = 0; r < 3; ++r)
        for (VertexId c = 0; c < 3; ++c) {
            tris.push_back({id(r, c), id(r + 1, c), id(r + 1, c + 1)});
            tris.push_back({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
        }
    return SimplicialComplex::from_ids(tris);
}

/// Path 0-1-2-3-4 as a 1-complex.
inline SimplicialComplex path5() { return SimplicialComplex::from_ids({{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

/// K4 on v, a, b, c; v has id 0.
inline Graph starcl_graph() { return Graph::from_edge_list({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Simplex S(std::initializer_list<VertexId> v) { return Simplex(std::vector<VertexId>(v)); }

/// Simplex of X from labels.
inline Simplex by_label(const SimplicialComplex& X, std::initializer_list<const char*> labels) {
    std::vector<VertexId> ids;
    for (const char* l : labels) ids.push_back(X.find_label(Label{std::string(l)}).value());
    return Simplex(std::move(ids));
}

}  // namespace lochom::fixtures
