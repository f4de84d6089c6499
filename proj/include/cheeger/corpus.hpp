#ifndef CHEEGER_CORPUS_HPP
#define CHEEGER_CORPUS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cheeger/embedded_graph.hpp"
#include "cheeger/simplicial_complex.hpp"

namespace cheeger {

// One shipped example: either a facet list or a printed adjacency matrix,
// with provenance-tagged expected values from the data file.
struct Fixture {
    std::string name;
    std::string kind; // "complex" | "graph-matrix"
    std::vector<std::vector<std::string>> facets; // complex kind
    AdjacencyMatrix matrix;                       // graph-matrix kind
    nlohmann::json expected;
};

// Directory holding the fixture JSON files. Defaults to the compiled-in
// data path; the CHEEGER_DATA environment variable overrides it.
std::string fixture_dir();

std::vector<std::string> fixture_names();

// Throws std::invalid_argument on an unknown name, std::runtime_error on a
// missing or malformed data file.
Fixture get_fixture(const std::string& name);

// Full closure of one n-simplex (n >= 2).
SimplicialComplex gen_simplex_closure(int n);

// Boundary of the m-simplex: all m-subsets of m+1 vertices as facets,
// pure (m-1)-dimensional with every codim-1 face of degree 2 (m >= 3).
SimplicialComplex gen_boundary_simplex(int m);

// Suspension of the m-cycle: m equator vertices plus two apexes, 2m
// triangles, every edge of degree 2 (m >= 3).
SimplicialComplex gen_bipyramid(int m);

// All triangles on m vertices; every edge lies in m-2 of them (m >= 3).
SimplicialComplex gen_complete_skeleton(int m);

// Backtracking isomorphism test with degree and neighborhood pruning.
// Guarded at order <= 20.
bool is_isomorphic(const AdjacencyMatrix& g1, const AdjacencyMatrix& g2);

} // namespace cheeger

#endif
