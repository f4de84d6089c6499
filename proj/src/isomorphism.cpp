#include "cheeger/corpus.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cheeger {

namespace {

// Refined invariant per vertex: (degree, sorted neighbor degrees).
std::vector<std::vector<int>> vertex_signatures(const AdjacencyMatrix& g) {
    std::vector<int> deg(g.order);
    for (int v = 0; v < g.order; ++v) deg[v] = g.degree(v);
    std::vector<std::vector<int>> sig(g.order);
    for (int v = 0; v < g.order; ++v) {
        sig[v].push_back(deg[v]);
        for (int u = 0; u < g.order; ++u)
            if (g.entries[v][u]) sig[v].push_back(deg[u]);
        std::sort(sig[v].begin() + 1, sig[v].end());
    }
    return sig;
}

bool extend(const AdjacencyMatrix& g1, const AdjacencyMatrix& g2,
            const std::vector<std::vector<int>>& sig1,
            const std::vector<std::vector<int>>& sig2, std::vector<int>& map,
            std::vector<char>& used, int v) {
    if (v == g1.order) return true;
    for (int w = 0; w < g2.order; ++w) {
        if (used[w] || sig1[v] != sig2[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g1.entries[v][u] != g2.entries[w][map[u]]) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend(g1, g2, sig1, sig2, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphic(const AdjacencyMatrix& g1, const AdjacencyMatrix& g2) {
    if (g1.order > 20 || g2.order > 20)
        throw std::runtime_error("is_isomorphic: size guard exceeded");
    if (g1.order != g2.order) return false;
    if (g1.edge_list().size() != g2.edge_list().size()) return false;

    auto sig1 = vertex_signatures(g1);
    auto sig2 = vertex_signatures(g2);
    auto sorted1 = sig1, sorted2 = sig2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return false;

    std::vector<int> map(g1.order, -1);
    std::vector<char> used(g2.order, 0);
    return extend(g1, g2, sig1, sig2, map, used, 0);
}

} // namespace cheeger
