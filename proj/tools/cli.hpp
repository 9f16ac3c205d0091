#pragma once

// The lochom command-line tool. run() takes argv-style arguments and output
// streams so tests can drive it in-process.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lochom/lochom.hpp"

namespace lochom::cli {

enum ExitCode : int { ok = 0, malformed = 1, precondition = 2 };

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw MalformedInput(std::string("bad ") + what + " list '" + text + "'");
        }
    }
    if (out.empty()) throw MalformedInput(std::string("empty ") + what + " list");
    return out;
}

/// "a,b,c" -> simplex of X. A token that reads as an integer matches an
/// integer label first, then the same text as a string label.
inline Simplex parse_simplex(const SimplicialComplex& X, const std::string& text) {
    std::vector<VertexId> ids;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::optional<VertexId> id;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used == tok.size()) id = X.find_label(Label{static_cast<std::int64_t>(v)});
        } catch (const std::exception&) {
        }
        if (!id) id = X.find_label(Label{tok});
        if (!id) throw UnknownSimplexError("no vertex labelled '" + tok + "'");
        ids.push_back(*id);
    }
    Simplex s(std::move(ids));
    if (!X.contains(s)) throw UnknownSimplexError("simplex " + X.format(s) + " is not a face of the complex");
    return s;
}

inline nlohmann::json simplex_json(const SimplicialComplex& X, const Simplex& s) {
    nlohmann::json out = nlohmann::json::array();
    for (VertexId v : s.vertices()) out.push_back(label_to_json(X.label(v)));
    return out;
}

inline nlohmann::json betti_json(const BettiVector& b) { return b.values; }

inline Graph load_graph(const std::string& path, const std::string& dataset) {
    if (!dataset.empty()) {
        if (dataset != "karate") throw MalformedInput("unknown dataset '" + dataset + "'");
        return karate_graph();
    }
    if (path.empty()) throw MalformedInput("give an edge-list file or --dataset");
    return read_edge_list_file(path);
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local homology of simplicial complexes and graphs"};
    app.name("lochom");
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = default_thread_count();
    app.add_option("--threads", threads, "Worker threads for per-simplex jobs (env LOCHOM_THREADS)")
        ->check(CLI::PositiveNumber);

    std::string input;

    auto* betti_cmd = app.add_subcommand("betti", "Global Betti numbers of a complex, as JSON");
    betti_cmd->add_option("complex", input, "Complex JSON file")->required();

    int local_m = 0;
    std::string local_simplex;
    bool local_csv = false;
    std::optional<int> local_dim;
    auto* local_cmd = app.add_subcommand("local", "Local Betti profiles of simplices over N_0 .. N_m");
    local_cmd->add_option("complex", input, "Complex JSON file")->required();
    local_cmd->add_option("--m", local_m, "Largest neighborhood level")->check(CLI::NonNegativeNumber);
    local_cmd->add_option("--simplex", local_simplex, "Only this simplex, as comma-separated labels");
    local_cmd->add_flag("--csv", local_csv, "CSV output instead of JSON");
    local_cmd->add_option("--dim", local_dim, "Ambient dimension for classification (default: complex dimension)")
        ->check(CLI::NonNegativeNumber);

    int strat_dim = 0;
    auto* strat_cmd = app.add_subcommand("strat", "Homology-manifold check and ramification list");
    strat_cmd->add_option("complex", input, "Complex JSON file")->required();
    strat_cmd->add_option("--dim", strat_dim, "Manifold dimension n")->required()->check(CLI::NonNegativeNumber);

    auto* flag_cmd = app.add_subcommand("flag", "Flag (clique) complex of an edge list, as JSON");
    flag_cmd->add_option("edges", input, "Edge-list file")->required();

    std::string dataset, subject_text = "vertex", m_text = "0,1,2", k_text = "1,2", scatter_dir;
    auto* corr_cmd = app.add_subcommand("correlate", "Pearson table of graph invariants vs local Betti numbers");
    corr_cmd->add_option("edges", input, "Edge-list file");
    corr_cmd->add_option("--dataset", dataset, "Bundled dataset instead of a file")->check(CLI::IsMember({"karate"}));
    corr_cmd->add_option("--subject", subject_text, "vertex or edge")->check(CLI::IsMember({"vertex", "edge"}));
    corr_cmd->add_option("--m", m_text, "Comma-separated neighborhood levels");
    corr_cmd->add_option("--k", k_text, "Comma-separated homology degrees");
    corr_cmd->add_option("--scatter-dir", scatter_dir, "Also write one x,y CSV per cell into this directory");

    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::size_t gen_n = 40, gen_m = 146, gen_attach = 4, gen_w = 5, gen_h = 5;
    double gen_p = 0.5;
    auto* gen_cmd = app.add_subcommand("generate", "Seeded random graph as an edge list");
    gen_cmd->require_subcommand(1);
    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", seed, "Random seed (mandatory)")->required();
        c->add_option("-o,--output", out_path, "Write to this file instead of stdout");
    };
    auto* er_cmd = gen_cmd->add_subcommand("er", "Uniform G(n, m), connected");
    er_cmd->add_option("--n", gen_n, "Vertices");
    er_cmd->add_option("--m", gen_m, "Edges");
    add_common(er_cmd);
    auto* ba_cmd = gen_cmd->add_subcommand("ba", "Preferential attachment");
    ba_cmd->add_option("--n", gen_n, "Vertices");
    ba_cmd->add_option("--attach", gen_attach, "Edges per arriving vertex");
    add_common(ba_cmd);
    auto* planar_cmd = gen_cmd->add_subcommand("planar", "Grid with random face diagonals");
    planar_cmd->add_option("--width", gen_w, "Columns");
    planar_cmd->add_option("--height", gen_h, "Rows");
    planar_cmd->add_option("--p", gen_p, "Diagonal probability")->check(CLI::Range(0.0, 1.0));
    add_common(planar_cmd);

    std::string dataset_name;
    auto* data_cmd = app.add_subcommand("dataset", "Print a bundled edge list");
    data_cmd->add_option("name", dataset_name, "Dataset name")->required()->check(CLI::IsMember({"karate"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : malformed;
    }

    try {
        if (*betti_cmd) {
            const auto X = read_complex_file(input);
            out << nlohmann::json{{"betti", detail::betti_json(global_betti(X))}}.dump() << '\n';
        } else if (*local_cmd) {
            const auto X = read_complex_file(input);
            std::vector<Simplex> targets;
            if (!local_simplex.empty()) {
                targets.push_back(detail::parse_simplex(X, local_simplex));
            } else {
                for (int k = 0; k <= X.dim(); ++k)
                    for (const auto& f : X.faces(k)) targets.push_back(f);
                std::sort(targets.begin(), targets.end());
            }
            const auto profiles = local_profiles(X, targets, local_m, local_dim, threads);
            const auto top = static_cast<std::size_t>(std::max(X.dim(), 0));
            if (local_csv) {
                out << "simplex;dim;m";
                for (std::size_t k = 0; k <= top; ++k) out << ";beta_" << k;
                out << ";class\n";
                for (const auto& p : profiles) {
                    for (std::size_t m = 0; m < p.levels.size(); ++m) {
                        out << X.format(p.simplex) << ';' << p.simplex.dim() << ';' << m;
                        for (std::size_t k = 0; k <= top; ++k) out << ';' << p.levels[m][k];
                        out << ';' << p.classification.to_string() << '\n';
                    }
                }
            } else {
                nlohmann::json list = nlohmann::json::array();
                for (const auto& p : profiles) {
                    nlohmann::json levels = nlohmann::json::array();
                    for (const auto& b : p.levels) levels.push_back(detail::betti_json(b));
                    list.push_back({{"simplex", detail::simplex_json(X, p.simplex)},
                                    {"levels", std::move(levels)},
                                    {"class", p.classification.to_string()}});
                }
                out << nlohmann::json{{"profiles", std::move(list)}}.dump() << '\n';
            }
        } else if (*strat_cmd) {
            const auto X = read_complex_file(input);
            const auto check = is_homology_n_manifold(X, strat_dim, threads);
            nlohmann::json ram = nlohmann::json::array();
            for (const auto& s : check.ramification) ram.push_back(detail::simplex_json(X, s));
            out << nlohmann::json{{"dimension", strat_dim},
                                  {"is_homology_manifold", check.is_manifold},
                                  {"ramification", std::move(ram)}}
                       .dump()
                << '\n';
        } else if (*flag_cmd) {
            const auto g = read_edge_list_file(input);
            out << complex_to_json(flag_complex(g)).dump() << '\n';
        } else if (*corr_cmd) {
            if (!input.empty() && !dataset.empty()) throw MalformedInput("give either an edge-list file or --dataset");
            const auto ms = detail::parse_int_list(m_text, "level");
            const auto ks = detail::parse_int_list(k_text, "degree");
            const auto g = detail::load_graph(input, dataset);
            const auto subject = subject_text == "edge" ? Subject::edge : Subject::vertex;
            const auto report = correlation_table(g, subject, ms, ks, threads);
            report.write_csv(out);
            if (!scatter_dir.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(scatter_dir, ec);
                for (const auto& c : report.cells) {
                    const auto path = scatter_dir + "/" + c.invariant + "_b" + std::to_string(c.k) + "_N" +
                                      std::to_string(c.m) + "_" + subject_text + ".csv";
                    std::ofstream f(path);
                    if (!f) throw MalformedInput("cannot write " + path);
                    write_scatter_csv(f, c);
                }
            }
        } else if (*gen_cmd) {
            Graph g;
            if (*er_cmd)
                g = erdos_renyi({gen_n, gen_m, *seed});
            else if (*ba_cmd)
                g = barabasi_albert({gen_n, gen_attach, *seed});
            else
                g = planar_grid({gen_w, gen_h, gen_p, *seed});
            if (out_path.empty()) {
                write_edge_list(out, g);
            } else {
                std::ofstream f(out_path);
                if (!f) throw MalformedInput("cannot write " + out_path);
                write_edge_list(f, g);
            }
        } else if (*data_cmd) {
            write_edge_list(out, karate_graph());
        }
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << '\n';
        return malformed;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return precondition;
    }
    return ok;
}

}  // namespace lochom::cli
