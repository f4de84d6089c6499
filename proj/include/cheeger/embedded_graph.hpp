#ifndef CHEEGER_EMBEDDED_GRAPH_HPP
#define CHEEGER_EMBEDDED_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "cheeger/simplicial_complex.hpp"

namespace cheeger {

struct AdjacencyMatrix {
    int order = 0;
    std::vector<std::vector<int>> entries; // symmetric 0/1, zero diagonal

    int degree(int v) const;
    bool is_symmetric() const;
    std::vector<std::pair<int, int>> edge_list() const; // i < j, sorted
    bool is_connected() const;
};

// One vertex per (n-1)-face of the complex, one edge per pair of
// (n-1)-faces sharing a common n-face.
struct EmbeddedGraph {
    std::vector<Simplex> vertices;          // (n-1)-faces, lexicographic
    std::vector<std::string> vertex_names;  // labels joined with ','
    std::vector<std::pair<int, int>> edges; // i < j, sorted
    std::vector<Simplex> face_of_edge;      // n-face containing edge i
    std::vector<int> degrees;

    int order() const { return static_cast<int>(vertices.size()); }
    bool is_connected() const;
};

// Throws std::invalid_argument on a non-pure complex or dimension < 1, and
// std::logic_error if two (n-1)-faces would share more than one n-face
// (impossible for a valid closure; indicates corrupted input).
EmbeddedGraph build_embedded_graph(const SimplicialComplex& complex);

AdjacencyMatrix adjacency_matrix(const EmbeddedGraph& graph);

bool check_regularity(const EmbeddedGraph& graph, int expected_degree);

// DOT text: "graph {" header, one `"a" -- "b";` line per edge in
// lexicographic order, "}" footer.
std::string export_dot(const EmbeddedGraph& graph);

} // namespace cheeger

#endif
