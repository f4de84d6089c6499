#include "cheeger/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cheeger/io.hpp"

namespace cheeger {

namespace {

std::vector<std::vector<std::string>> subsets_as_facets(int num_vertices,
                                                        int subset_size) {
    std::vector<std::vector<std::string>> facets;
    std::vector<int> idx(subset_size);
    for (int i = 0; i < subset_size; ++i) idx[i] = i;
    while (true) {
        std::vector<std::string> f;
        for (int i : idx) f.push_back(std::to_string(i));
        facets.push_back(std::move(f));
        int pos = subset_size - 1;
        while (pos >= 0 && idx[pos] == num_vertices - subset_size + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
    }
    return facets;
}

} // namespace

std::string fixture_dir() {
    if (const char* env = std::getenv("CHEEGER_DATA")) return env;
#ifdef CHEEGER_DATA_DIR
    return CHEEGER_DATA_DIR;
#else
    return "data";
#endif
}

std::vector<std::string> fixture_names() {
    return {"ex41", "ex42-graph", "ex43-graph", "hex-bipyramid"};
}

Fixture get_fixture(const std::string& name) {
    const auto names = fixture_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw std::invalid_argument("get_fixture: unknown fixture " + name);

    const std::string path = fixture_dir() + "/" + name + ".json";
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("get_fixture: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    nlohmann::json j = nlohmann::json::parse(bytes);
    Fixture fx;
    fx.name = j.at("name").get<std::string>();
    fx.kind = j.at("kind").get<std::string>();
    fx.expected = j.value("expected", nlohmann::json::object());
    if (fx.kind == "complex") {
        const auto doc = parse_complex_file(bytes, ComplexFormat::Json);
        fx.facets = doc.facets;
    } else if (fx.kind == "graph-matrix") {
        fx.matrix = parse_graph_file(bytes);
    } else {
        throw std::runtime_error("get_fixture: unknown kind " + fx.kind);
    }
    return fx;
}

SimplicialComplex gen_simplex_closure(int n) {
    if (n < 2)
        throw std::invalid_argument("gen_simplex_closure: n must be >= 2");
    std::vector<std::string> facet;
    for (int i = 0; i <= n; ++i) facet.push_back(std::to_string(i));
    return SimplicialComplex::from_facets({facet});
}

SimplicialComplex gen_boundary_simplex(int m) {
    if (m < 3)
        throw std::invalid_argument("gen_boundary_simplex: m must be >= 3");
    if (m > 20)
        throw std::runtime_error("gen_boundary_simplex: size guard exceeded");
    return SimplicialComplex::from_facets(subsets_as_facets(m + 1, m));
}

SimplicialComplex gen_bipyramid(int m) {
    if (m < 3)
        throw std::invalid_argument("gen_bipyramid: m must be >= 3");
    std::vector<std::vector<std::string>> facets;
    const std::string north = std::to_string(m);
    const std::string south = std::to_string(m + 1);
    for (int i = 0; i < m; ++i) {
        const std::string a = std::to_string(i);
        const std::string b = std::to_string((i + 1) % m);
        facets.push_back({a, b, north});
        facets.push_back({a, b, south});
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex gen_complete_skeleton(int m) {
    if (m < 3)
        throw std::invalid_argument("gen_complete_skeleton: m must be >= 3");
    if (m > 20)
        throw std::runtime_error("gen_complete_skeleton: size guard exceeded");
    return SimplicialComplex::from_facets(subsets_as_facets(m, 3));
}

} // namespace cheeger
