#ifndef CHEEGER_CHEEGER_HPP
#define CHEEGER_CHEEGER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cheeger/embedded_graph.hpp"
#include "cheeger/rational.hpp"
#include "cheeger/simplicial_complex.hpp"
#include "cheeger/spectral.hpp"

namespace cheeger {

// One candidate cut of Definition-style minimizations: the side A, the
// number of crossing top-dimensional faces (or edges), and the exact value
// |V|*|F| / (|A|*|V\A|).
struct Cut {
    std::vector<int> side_a; // sorted vertex indices, 0 < |A| < |V|
    long long crossing = 0;
    Rational value;
};

struct ExactOptions {
    int max_vertices = 22;       // brute-force guard on |V|
    bool prune_connected = false; // skip cuts with a disconnected side, n = 2 only
    int workers = 1;             // subset range partitioning
};

// Exact H(X) by full subset enumeration, one designated vertex pinned to A.
// Ties broken by lexicographically smallest A in canonical vertex order.
// Throws on non-pure/disconnected input or when |V| exceeds the guard.
Cut exact_H(const SimplicialComplex& complex, const ExactOptions& options = {});

// Every vertex subset A realizing the minimum of exact_H, both sides of
// every minimizing cut included. Sorted lexicographically.
std::vector<std::vector<int>> all_minimizing_cuts(const SimplicialComplex& complex,
                                                  int max_vertices = 22);

// Exact graph Cheeger constant h(G) over an adjacency matrix.
Cut exact_h_graph(const AdjacencyMatrix& graph, int max_order = 24,
                  int workers = 1);

// min over 0 < |A| < |V|/2 (strict) of |E(A, V\A)| / |A|.
Rational phi_graph(const AdjacencyMatrix& graph, int max_order = 24);

// Partition constant: min over partitions of V into d+1 nonempty parts of
// |V|*|F(A_0..A_d)| / prod |A_i|, F counting d-faces with one vertex per
// part. Guarded at |V| <= max_vertices.
Rational prt_h(const SimplicialComplex& complex, int max_vertices = 12);

// Spectral lower bound |V|*delta_min*(2D - lambda) / (4*|W|) for n = 2.
double bound_2d(const ComplexProfile& profile, double lambda);

// Spectral lower bound 2*delta_min*(nD - lambda) / (|W|*n*k*(n+1-k)) with
// k = floor((n+1)/2), for n >= 3.
double bound_nd(const ComplexProfile& profile, double lambda);

// Classical sandwich (d - lambda, 2*sqrt(2d(d - lambda))) for a d-regular
// graph.
std::pair<double, double> graph_bounds(int d, double lambda);

struct WitnessCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool pass = false; // lhs <= rhs, exact
};

struct WitnessB {
    std::vector<int> side_b; // indices into W, sorted
    std::vector<WitnessCheck> checks;
    bool all_pass = false;
};

// B = {edges inside A} plus the lexicographically smallest crossing edge;
// evaluates |E(B,W\B)|/2 <= |F|, |A| <= |B|, |V\A| <= 2|W\B|/delta_min.
// n = 2 only.
WitnessB witness_B_2d(const SimplicialComplex& complex, const std::vector<int>& A);

// B = {(n-1)-faces inside A} plus the lexicographically smallest (n-1)-face
// meeting both sides; evaluates |E(B,W\B)| <= k(n+1-k)|F|, 1 <= |B|,
// |V\A| <= n|W\B|/delta_min. n >= 3 only.
WitnessB witness_B_nd(const SimplicialComplex& complex, const std::vector<int>& A);

// Exhaustive check that every bipartition of the n-simplex vertex set cuts
// either n or n+1 of its (n-1)-faces. Guarded at n <= 12.
bool claim41_check(int n);

// True iff every minimizing cut side induces a connected 1-skeleton
// subgraph. n = 2 only.
bool minimizers_connected(const SimplicialComplex& complex, int max_vertices = 22);

struct Verdict {
    std::string name;
    std::string status; // "pass", "fail", "not applicable", "vacuous", ...
    std::string detail;
};

struct BoundReport {
    ComplexProfile profile;
    int k = 0;
    int embedded_order = 0;
    int embedded_edges = 0;
    bool embedded_connected = false;
    double lambda = 0.0;
    std::optional<double> lower_bound; // absent when D non-constant or n < 2
    std::optional<Cut> exact_cut;      // absent when over the guard
    std::optional<Rational> prt;       // only when requested
    std::optional<WitnessB> witness;   // at the minimizing A
    bool equality = false;             // |bound - H| <= tol
    bool vacuous = false;              // disconnected embedded graph
    std::vector<Verdict> verdicts;
    double tol = 1e-9;
};

struct ReportOptions {
    double tol = 1e-9;
    int max_vertices = 22;
    bool prune_connected = false;
    int workers = 1;
    bool with_prt = false;
    int prt_max_vertices = 12;
};

// Profile + spectrum + applicable bound + exact H + witness + verdicts.
BoundReport full_report(const SimplicialComplex& complex,
                        const ReportOptions& options = {});

} // namespace cheeger

#endif
