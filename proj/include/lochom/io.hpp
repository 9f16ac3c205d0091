#pragma once

// File formats: complex JSON, whitespace edge lists, CSV helpers.

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lochom/complex.hpp"
#include "lochom/graph.hpp"

namespace lochom {

// Complex JSON:
//   {"maximal_simplices": [[<label>, ...], ...]}
// where labels are strings or integers. Canonical output uses interned ids
// plus a "labels" array mapping id -> original label.

inline Label label_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) return j.get<std::string>();
    throw MalformedInput("vertex labels must be strings or integers, got " + j.dump());
}

inline nlohmann::json label_to_json(const Label& l) {
    if (const auto* i = std::get_if<std::int64_t>(&l)) return *i;
    return std::get<std::string>(l);
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("maximal_simplices") || !j["maximal_simplices"].is_array())
        throw MalformedInput("complex JSON needs a \"maximal_simplices\" array");
    const auto& list = j["maximal_simplices"];
    std::vector<std::vector<Label>> simplices;
    for (const auto& s : list) {
        if (!s.is_array()) throw MalformedInput("each simplex must be an array of labels");
        std::vector<Label> labels;
        for (const auto& l : s) labels.push_back(label_from_json(l));
        simplices.push_back(std::move(labels));
    }
    // Canonical files carry ids plus a "labels" table mapping id -> label.
    if (j.contains("labels")) {
        const auto& table = j["labels"];
        if (!table.is_array()) throw MalformedInput("\"labels\" must be an array");
        std::vector<Label> names;
        for (const auto& l : table) names.push_back(label_from_json(l));
        std::vector<std::vector<VertexId>> ids;
        for (const auto& s : simplices) {
            std::vector<VertexId> v;
            for (const auto& l : s) {
                const auto* id = std::get_if<std::int64_t>(&l);
                if (!id || *id < 0 || static_cast<std::size_t>(*id) >= names.size())
                    throw MalformedInput("simplex entries must be ids into \"labels\"");
                v.push_back(static_cast<VertexId>(*id));
            }
            ids.push_back(std::move(v));
        }
        return SimplicialComplex::from_ids(ids, std::move(names));
    }
    return SimplicialComplex::from_maximal(simplices);
}

inline SimplicialComplex read_complex_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
    return complex_from_json(j);
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    return read_complex_json(in);
}

inline nlohmann::json complex_to_json(const SimplicialComplex& X) {
    nlohmann::json simplices = nlohmann::json::array();
    for (const auto& s : X.maximal_simplices()) {
        nlohmann::json ids = nlohmann::json::array();
        for (VertexId v : s.vertices()) ids.push_back(v);
        simplices.push_back(std::move(ids));
    }
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : X.labels()) labels.push_back(label_to_json(l));
    return {{"maximal_simplices", std::move(simplices)}, {"labels", std::move(labels)}};
}

// Edge lists: one "u v" pair per line, '#' starts a comment, optional first
// line "n=<count>" declares the vertex count (for isolated vertices).

inline Graph read_edge_list(std::istream& in) {
    std::vector<Edge> pairs;
    std::optional<std::size_t> n;
    std::string line;
    std::size_t lineno = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!seen_content && first.rfind("n=", 0) == 0) {
            seen_content = true;
            try {
                std::size_t used = 0;
                const auto value = std::stoll(first.substr(2), &used);
                if (value < 0 || used != first.size() - 2) throw std::invalid_argument("n");
                n = static_cast<std::size_t>(value);
            } catch (const std::exception&) {
                throw MalformedInput("line " + std::to_string(lineno) + ": bad vertex count header");
            }
            continue;
        }
        seen_content = true;
        std::string second, extra;
        if (!(ls >> second) || (ls >> extra))
            throw MalformedInput("line " + std::to_string(lineno) + ": expected two vertex ids");
        auto parse = [&](const std::string& tok) {
            try {
                std::size_t used = 0;
                const auto value = std::stoll(tok, &used);
                if (value < 0 || used != tok.size() || value > 0xfffffffeLL) throw std::invalid_argument(tok);
                return static_cast<VertexId>(value);
            } catch (const std::exception&) {
                throw MalformedInput("line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
            }
        };
        pairs.emplace_back(parse(first), parse(second));
    }
    return Graph::from_edge_list(pairs, n);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n=" << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Fixed-precision formatting so reports are byte-stable.
inline std::string format_real(double x, int digits = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << x;
    auto s = os.str();
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

}  // namespace lochom
