#ifndef CHEEGER_SIMPLICIAL_COMPLEX_HPP
#define CHEEGER_SIMPLICIAL_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

namespace cheeger {

// A simplex as a strictly increasing sequence of dense vertex indices.
using Simplex = std::vector<int>;

// Label order used everywhere for canonicalization: labels that look like
// non-negative integers compare numerically and sort before all other
// labels; the rest compare as plain strings.
bool label_less(const std::string& a, const std::string& b);

struct ValidationResult {
    bool pure = false;
    int dimension = -1; // max facet dimension
    bool connected = false;
};

struct ComplexProfile {
    int dimension = 0;               // n
    int num_vertices = 0;            // |V|
    int num_codim1 = 0;              // |W|, count of (n-1)-faces
    std::optional<int> degree_D;     // present iff all (n-1)-face degrees agree
    int delta_min = 0;               // min over v of #((n-1)-faces containing v)
};

// Finite abstract simplicial complex, stored as its full downward closure
// grouped by dimension. Immutable after construction.
class SimplicialComplex {
public:
    // Downward closure of the given facets. Vertex labels are canonicalized
    // (see label_less) and mapped to dense indices 0..|V|-1 in that order.
    // Throws std::invalid_argument on an empty list, an empty facet, or a
    // facet with a repeated label.
    static SimplicialComplex from_facets(
        const std::vector<std::vector<std::string>>& facet_list);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }
    int vertex_index(const std::string& label) const; // throws if unknown

    // Dimension of the largest face present.
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }

    // All k-dimensional faces in lexicographic order. Throws on k out of
    // [0, dimension()].
    const std::vector<Simplex>& k_faces(int k) const;

    // Inclusion-maximal faces.
    const std::vector<Simplex>& facets() const { return facets_; }

    bool has_face(const Simplex& s) const;

    // Number of (k+1)-faces containing the given k-face.
    int face_degree(const Simplex& s) const;

    // Purity, dimension and 1-skeleton connectivity. Never throws.
    ValidationResult validate() const;

    // Degree statistics of a pure connected complex. Throws on non-pure or
    // disconnected input.
    ComplexProfile profile() const;

    // True iff the 1-skeleton subgraph induced by the vertex set A is
    // connected. Throws on empty A or out-of-range indices.
    bool induced_subgraph_connected(const std::vector<int>& A) const;

    // 1-skeleton adjacency as bit masks (valid for num_vertices() <= 64).
    const std::vector<unsigned long long>& skeleton_masks() const;

private:
    std::vector<std::string> labels_;         // index -> label, canonical order
    std::vector<std::vector<Simplex>> faces_; // faces_[k], each sorted
    std::vector<Simplex> facets_;
    std::vector<unsigned long long> adj_;     // 1-skeleton bit masks
};

} // namespace cheeger

#endif
