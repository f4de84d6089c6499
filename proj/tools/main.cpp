// Command line front end: parse complex/graph files, run the exact engine
// and the spectral bounds, render reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cheeger/cheeger.hpp"
#include "cheeger/corpus.hpp"
#include "cheeger/io.hpp"
#include "cheeger/spectral.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cheeger::SimplicialComplex load_complex(const std::string& path) {
    const auto doc = cheeger::parse_complex_file(slurp(path));
    return cheeger::SimplicialComplex::from_facets(doc.facets);
}

struct GlobalOpts {
    bool json = false;
    double tol = 1e-9;
    int max_exact_vertices = 22;
    int max_exact_graph = 24;
    bool prune_connected = false;
    int workers = 1;
};

cheeger::ReportOptions report_options(const GlobalOpts& g, bool with_prt = false) {
    cheeger::ReportOptions o;
    o.tol = g.tol;
    o.max_vertices = g.max_exact_vertices;
    o.prune_connected = g.prune_connected;
    o.workers = g.workers;
    o.with_prt = with_prt;
    return o;
}

void print_spectrum(const cheeger::Spectrum& s, bool json) {
    if (json) {
        nlohmann::ordered_json j;
        nlohmann::ordered_json evs = nlohmann::ordered_json::array();
        for (double ev : s.eigenvalues) evs.push_back(cheeger::format_real(ev));
        j["eigenvalues"] = std::move(evs);
        j["residual_bound"] = cheeger::format_real(s.residual_bound);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "eigenvalues (descending):\n";
        for (double ev : s.eigenvalues)
            std::cout << "  " << cheeger::format_real(ev) << "\n";
        std::cout << "residual bound: " << cheeger::format_real(s.residual_bound)
                  << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cheeger-type constants of simplicial complexes and their "
                 "embedded-graph spectral bounds"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--tol", g.tol, "numerical tolerance (default 1e-9)");
    app.add_option("--max-exact-vertices", g.max_exact_vertices,
                   "brute-force guard for H(X) (default 22)");
    app.add_option("--max-exact-graph", g.max_exact_graph,
                   "brute-force guard for h(G) (default 24)");
    app.add_flag("--prune-connected", g.prune_connected,
                 "skip disconnected candidate sides (2-dim only)");
    app.add_option("--workers", g.workers, "parallel workers for exact search");

    std::string file, dot_path, graph_file, corpus_arg;
    bool with_prt = false;

    auto* validate_cmd = app.add_subcommand("validate", "purity, dimension, connectivity");
    validate_cmd->add_option("file", file)->required();

    auto* info_cmd = app.add_subcommand("info", "complex profile (n, |V|, |W|, D, delta_min)");
    info_cmd->add_option("file", file)->required();

    auto* embedded_cmd = app.add_subcommand("embedded", "embedded graph summary");
    embedded_cmd->add_option("file", file)->required();
    embedded_cmd->add_option("--dot", dot_path, "write DOT text to this path ('-' for stdout)");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "adjacency spectrum");
    spectrum_cmd->add_option("file", file);
    spectrum_cmd->add_option("--graph", graph_file, "read an adjacency-matrix JSON file");

    auto* cheeger_cmd = app.add_subcommand("cheeger", "exact H(X) by brute force");
    cheeger_cmd->add_option("file", file)->required();
    cheeger_cmd->add_flag("--prt", with_prt, "also compute the partition constant");

    auto* bounds_cmd = app.add_subcommand("bounds", "spectral lower bound only");
    bounds_cmd->add_option("file", file)->required();

    auto* verify_cmd = app.add_subcommand("verify", "full report with verdicts; exit 1 on failure");
    verify_cmd->add_option("file", file)->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "list or emit shipped fixtures");
    corpus_cmd->add_option("action", corpus_arg, "'list' or a fixture name to emit")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) {
            const auto X = load_complex(file);
            const auto v = X.validate();
            if (g.json) {
                nlohmann::ordered_json j;
                j["pure"] = v.pure;
                j["dimension"] = v.dimension;
                j["connected"] = v.connected;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "pure:      " << (v.pure ? "yes" : "no") << "\n"
                          << "dimension: " << v.dimension << "\n"
                          << "connected: " << (v.connected ? "yes" : "no") << "\n";
            }
        } else if (info_cmd->parsed()) {
            const auto X = load_complex(file);
            const auto p = X.profile();
            if (g.json) {
                nlohmann::ordered_json j;
                j["dimension"] = p.dimension;
                j["num_vertices"] = p.num_vertices;
                j["num_codim1"] = p.num_codim1;
                if (p.degree_D) j["degree_D"] = *p.degree_D;
                else j["degree_D"] = nullptr;
                j["delta_min"] = p.delta_min;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "dimension n: " << p.dimension << "\n"
                          << "|V|:         " << p.num_vertices << "\n"
                          << "|W|:         " << p.num_codim1 << "\n"
                          << "D:           "
                          << (p.degree_D ? std::to_string(*p.degree_D)
                                         : std::string("non-constant"))
                          << "\n"
                          << "delta_min:   " << p.delta_min << "\n";
            }
        } else if (embedded_cmd->parsed()) {
            const auto X = load_complex(file);
            const auto graph = cheeger::build_embedded_graph(X);
            if (!dot_path.empty()) {
                const std::string dot = cheeger::export_dot(graph);
                if (dot_path == "-") {
                    std::cout << dot;
                } else {
                    std::ofstream out(dot_path, std::ios::binary);
                    if (!out) throw std::invalid_argument("cannot write " + dot_path);
                    out << dot;
                }
            }
            if (g.json) {
                nlohmann::ordered_json j;
                j["order"] = graph.order();
                j["edges"] = graph.edges.size();
                j["connected"] = graph.is_connected();
                j["vertices"] = graph.vertex_names;
                std::cout << j.dump(2) << "\n";
            } else if (dot_path != "-") {
                std::cout << "order:     " << graph.order() << "\n"
                          << "edges:     " << graph.edges.size() << "\n"
                          << "connected: " << (graph.is_connected() ? "yes" : "no")
                          << "\n";
            }
        } else if (spectrum_cmd->parsed()) {
            cheeger::AdjacencyMatrix m;
            if (!graph_file.empty()) {
                m = cheeger::parse_graph_file(slurp(graph_file));
            } else if (!file.empty()) {
                m = cheeger::adjacency_matrix(
                    cheeger::build_embedded_graph(load_complex(file)));
            } else {
                throw std::invalid_argument("spectrum: need FILE or --graph FILE");
            }
            print_spectrum(cheeger::eigenvalues_symmetric(m, g.tol), g.json);
        } else if (cheeger_cmd->parsed()) {
            const auto X = load_complex(file);
            const auto r = cheeger::full_report(X, report_options(g, with_prt));
            std::cout << cheeger::render_report(
                r, g.json ? cheeger::ReportMode::Json : cheeger::ReportMode::Human);
        } else if (bounds_cmd->parsed()) {
            const auto X = load_complex(file);
            auto opts = report_options(g);
            opts.max_vertices = 0; // bound only, skip the exact search
            const auto r = cheeger::full_report(X, opts);
            std::cout << cheeger::render_report(
                r, g.json ? cheeger::ReportMode::Json : cheeger::ReportMode::Human);
        } else if (verify_cmd->parsed()) {
            const auto X = load_complex(file);
            const auto r = cheeger::full_report(X, report_options(g));
            std::cout << cheeger::render_report(
                r, g.json ? cheeger::ReportMode::Json : cheeger::ReportMode::Human);
            for (const auto& v : r.verdicts)
                if (v.status == "fail") return 1;
        } else if (corpus_cmd->parsed()) {
            if (corpus_arg == "list") {
                for (const auto& n : cheeger::fixture_names())
                    std::cout << n << "\n";
            } else {
                const auto fx = cheeger::get_fixture(corpus_arg);
                std::ifstream in(cheeger::fixture_dir() + "/" + fx.name + ".json");
                std::cout << in.rdbuf();
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
