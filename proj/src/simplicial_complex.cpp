#include "cheeger/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cheeger {

namespace {

bool numeric_label(const std::string& s) {
    if (s.empty() || s.size() > 18) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

bool label_less(const std::string& a, const std::string& b) {
    const bool na = numeric_label(a), nb = numeric_label(b);
    if (na != nb) return na; // numeric labels sort first
    if (na && nb) {
        long long va = std::stoll(a), vb = std::stoll(b);
        if (va != vb) return va < vb;
        return a < b; // "007" vs "7"
    }
    return a < b;
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facet_list) {
    if (facet_list.empty())
        throw std::invalid_argument("from_facets: empty facet list");

    std::set<std::string, bool (*)(const std::string&, const std::string&)>
        label_set(label_less);
    for (const auto& f : facet_list) {
        if (f.empty())
            throw std::invalid_argument("from_facets: empty facet");
        std::set<std::string> dedup(f.begin(), f.end());
        if (dedup.size() != f.size())
            throw std::invalid_argument("from_facets: duplicate vertex in facet");
        label_set.insert(f.begin(), f.end());
    }

    SimplicialComplex X;
    X.labels_.assign(label_set.begin(), label_set.end());
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(X.labels_.size()); ++i)
        index[X.labels_[i]] = i;

    int max_dim = 0;
    std::vector<Simplex> input_faces;
    for (const auto& f : facet_list) {
        Simplex s;
        s.reserve(f.size());
        for (const auto& lbl : f) s.push_back(index.at(lbl));
        std::sort(s.begin(), s.end());
        max_dim = std::max(max_dim, static_cast<int>(s.size()) - 1);
        input_faces.push_back(std::move(s));
    }

    // Downward closure: every nonempty subset of every input face.
    std::vector<std::set<Simplex>> by_dim(max_dim + 1);
    for (const auto& f : input_faces) {
        const int m = static_cast<int>(f.size());
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            Simplex sub;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) sub.push_back(f[i]);
            by_dim[sub.size() - 1].insert(std::move(sub));
        }
    }
    X.faces_.resize(max_dim + 1);
    for (int k = 0; k <= max_dim; ++k)
        X.faces_[k].assign(by_dim[k].begin(), by_dim[k].end());

    // Facets: faces not properly contained in another face.
    for (int k = 0; k <= max_dim; ++k) {
        for (const auto& f : X.faces_[k]) {
            bool maximal = true;
            for (int j = k + 1; j <= max_dim && maximal; ++j) {
                for (const auto& g : X.faces_[j]) {
                    if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (maximal) X.facets_.push_back(f);
        }
    }

    // 1-skeleton bit masks.
    X.adj_.assign(X.labels_.size(), 0ull);
    if (max_dim >= 1) {
        for (const auto& e : X.faces_[1]) {
            X.adj_[e[0]] |= 1ull << e[1];
            X.adj_[e[1]] |= 1ull << e[0];
        }
    }
    return X;
}

int SimplicialComplex::vertex_index(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label, label_less);
    if (it == labels_.end() || *it != label)
        throw std::invalid_argument("unknown vertex label: " + label);
    return static_cast<int>(it - labels_.begin());
}

const std::vector<Simplex>& SimplicialComplex::k_faces(int k) const {
    if (k < 0 || k > dimension())
        throw std::out_of_range("k_faces: dimension out of range");
    return faces_[k];
}

bool SimplicialComplex::has_face(const Simplex& s) const {
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dimension()) return false;
    return std::binary_search(faces_[k].begin(), faces_[k].end(), s);
}

int SimplicialComplex::face_degree(const Simplex& s) const {
    const int k = static_cast<int>(s.size());
    if (k == 0 || k > dimension()) return 0;
    int deg = 0;
    for (const auto& g : faces_[k])
        if (std::includes(g.begin(), g.end(), s.begin(), s.end())) ++deg;
    return deg;
}

ValidationResult SimplicialComplex::validate() const {
    ValidationResult r;
    r.dimension = dimension();
    r.pure = true;
    for (const auto& f : facets_) {
        if (static_cast<int>(f.size()) - 1 != r.dimension) {
            r.pure = false;
            break;
        }
    }
    // BFS over the 1-skeleton.
    const int nv = num_vertices();
    std::vector<char> seen(nv, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        unsigned long long m = adj_[v];
        while (m) {
            int u = __builtin_ctzll(m);
            m &= m - 1;
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    r.connected = (count == nv);
    return r;
}

ComplexProfile SimplicialComplex::profile() const {
    const auto v = validate();
    if (!v.pure) throw std::invalid_argument("profile: complex is not pure");
    if (!v.connected)
        throw std::invalid_argument("profile: complex is not connected");

    ComplexProfile p;
    p.dimension = v.dimension;
    p.num_vertices = num_vertices();
    const int n = v.dimension;
    const auto& codim1 = (n >= 1) ? faces_[n - 1] : faces_[0];
    p.num_codim1 = static_cast<int>(codim1.size());

    bool constant = true;
    int d0 = -1;
    for (const auto& f : codim1) {
        const int d = face_degree(f);
        if (d0 < 0) d0 = d;
        else if (d != d0) constant = false;
    }
    if (constant && d0 > 0) p.degree_D = d0;

    std::vector<int> delta(num_vertices(), 0);
    for (const auto& f : codim1)
        for (int u : f) ++delta[u];
    p.delta_min = *std::min_element(delta.begin(), delta.end());
    return p;
}

bool SimplicialComplex::induced_subgraph_connected(const std::vector<int>& A) const {
    if (A.empty())
        throw std::invalid_argument("induced_subgraph_connected: empty vertex set");
    unsigned long long mask = 0;
    for (int v : A) {
        if (v < 0 || v >= num_vertices())
            throw std::invalid_argument("induced_subgraph_connected: unknown vertex");
        mask |= 1ull << v;
    }
    unsigned long long reached = 1ull << A[0];
    unsigned long long frontier = reached;
    while (frontier) {
        unsigned long long next = 0;
        unsigned long long m = frontier;
        while (m) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            next |= adj_[v] & mask & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

const std::vector<unsigned long long>& SimplicialComplex::skeleton_masks() const {
    return adj_;
}

} // namespace cheeger
