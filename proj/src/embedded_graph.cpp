#include "cheeger/embedded_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cheeger {

int AdjacencyMatrix::degree(int v) const {
    int d = 0;
    for (int x : entries.at(v)) d += x;
    return d;
}

bool AdjacencyMatrix::is_symmetric() const {
    if (static_cast<int>(entries.size()) != order) return false;
    for (int i = 0; i < order; ++i) {
        if (static_cast<int>(entries[i].size()) != order) return false;
        for (int j = 0; j < order; ++j)
            if (entries[i][j] != entries[j][i]) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> AdjacencyMatrix::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (entries[i][j]) edges.emplace_back(i, j);
    return edges;
}

bool AdjacencyMatrix::is_connected() const {
    if (order == 0) return true;
    std::vector<char> seen(order, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < order; ++u) {
            if (entries[v][u] && !seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == order;
}

bool EmbeddedGraph::is_connected() const {
    if (vertices.empty()) return true;
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(vertices.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == vertices.size();
}

EmbeddedGraph build_embedded_graph(const SimplicialComplex& complex) {
    const auto v = complex.validate();
    if (!v.pure)
        throw std::invalid_argument("build_embedded_graph: complex is not pure");
    const int n = v.dimension;
    if (n < 1)
        throw std::invalid_argument("build_embedded_graph: dimension must be >= 1");

    EmbeddedGraph g;
    g.vertices = complex.k_faces(n - 1); // already lexicographic
    std::map<Simplex, int> index;
    for (int i = 0; i < g.order(); ++i) index[g.vertices[i]] = i;

    for (const auto& f : g.vertices) {
        std::string name;
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) name += ',';
            name += complex.label(f[i]);
        }
        g.vertex_names.push_back(std::move(name));
    }

    std::map<std::pair<int, int>, Simplex> edge_face;
    for (const auto& top : complex.k_faces(n)) {
        // all (n-1)-subfaces of this n-face, pairwise connected
        std::vector<int> ids;
        for (size_t skip = 0; skip < top.size(); ++skip) {
            Simplex sub;
            for (size_t i = 0; i < top.size(); ++i)
                if (i != skip) sub.push_back(top[i]);
            ids.push_back(index.at(sub));
        }
        for (size_t a = 0; a < ids.size(); ++a) {
            for (size_t b = a + 1; b < ids.size(); ++b) {
                auto key = std::minmax(ids[a], ids[b]);
                auto [it, inserted] = edge_face.emplace(key, top);
                if (!inserted)
                    throw std::logic_error(
                        "build_embedded_graph: two codim-1 faces share more "
                        "than one top face (corrupted complex)");
            }
        }
    }

    g.degrees.assign(g.order(), 0);
    for (const auto& [edge, face] : edge_face) {
        g.edges.push_back(edge);
        g.face_of_edge.push_back(face);
        ++g.degrees[edge.first];
        ++g.degrees[edge.second];
    }
    return g;
}

AdjacencyMatrix adjacency_matrix(const EmbeddedGraph& graph) {
    AdjacencyMatrix m;
    m.order = graph.order();
    m.entries.assign(m.order, std::vector<int>(m.order, 0));
    for (const auto& [a, b] : graph.edges) {
        m.entries[a][b] = 1;
        m.entries[b][a] = 1;
    }
    return m;
}

bool check_regularity(const EmbeddedGraph& graph, int expected_degree) {
    return std::all_of(graph.degrees.begin(), graph.degrees.end(),
                       [&](int d) { return d == expected_degree; });
}

std::string export_dot(const EmbeddedGraph& graph) {
    std::string out = "graph {\n";
    for (const auto& [a, b] : graph.edges) {
        out += "\"" + graph.vertex_names[a] + "\" -- \"" +
               graph.vertex_names[b] + "\";\n";
    }
    out += "}\n";
    return out;
}

} // namespace cheeger
