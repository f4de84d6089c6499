#include "cheeger/cheeger.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace cheeger {

namespace {

// Candidate cut tracked during enumeration: value = |V|*F / (a*(|V|-a)),
// compared exactly by cross-multiplication (all products fit in 64 bits at
// the enforced guards).
struct Candidate {
    long long crossing = 0;
    int a_size = 0;
    std::uint32_t mask = 0;
    bool valid = false;
};

// Lexicographic order on the vertex sets encoded by the masks, shorter
// prefix first.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        const int ta = __builtin_ctz(a);
        const int tb = __builtin_ctz(b);
        if (ta != tb) return ta < tb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// true iff (F1, a1) yields a strictly smaller cut value than (F2, a2).
bool value_less(long long f1, int a1, long long f2, int a2, int nv) {
    const long long lhs = f1 * static_cast<long long>(a2) * (nv - a2);
    const long long rhs = f2 * static_cast<long long>(a1) * (nv - a1);
    return lhs < rhs;
}

bool value_equal(long long f1, int a1, long long f2, int a2, int nv) {
    return f1 * static_cast<long long>(a2) * (nv - a2) ==
           f2 * static_cast<long long>(a1) * (nv - a1);
}

void merge_candidate(Candidate& best, const Candidate& c, int nv) {
    if (!c.valid) return;
    if (!best.valid ||
        value_less(c.crossing, c.a_size, best.crossing, best.a_size, nv) ||
        (value_equal(c.crossing, c.a_size, best.crossing, best.a_size, nv) &&
         mask_lex_less(c.mask, best.mask))) {
        best = c;
    }
}

std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(__builtin_ctz(mask));
        mask &= mask - 1;
    }
    return out;
}

std::vector<std::uint32_t> top_face_masks(const SimplicialComplex& X, int n) {
    std::vector<std::uint32_t> masks;
    for (const auto& f : X.k_faces(n)) {
        std::uint32_t m = 0;
        for (int v : f) m |= 1u << v;
        masks.push_back(m);
    }
    return masks;
}

long long crossing_faces(const std::vector<std::uint32_t>& faces,
                         std::uint32_t amask, std::uint32_t full) {
    long long count = 0;
    const std::uint32_t bmask = full & ~amask;
    for (std::uint32_t f : faces)
        if ((f & amask) && (f & bmask)) ++count;
    return count;
}

bool mask_connected(const std::vector<unsigned long long>& adj,
                    std::uint32_t mask) {
    if (mask == 0) return true;
    const std::uint32_t start = 1u << __builtin_ctz(mask);
    std::uint32_t reached = start;
    std::uint32_t frontier = start;
    while (frontier) {
        std::uint32_t next = 0;
        std::uint32_t m = frontier;
        while (m) {
            const int v = __builtin_ctz(m);
            m &= m - 1;
            next |= static_cast<std::uint32_t>(adj[v]) & mask & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

// Shared driver for exact_H / all_minimizing_cuts: enumerates every subset
// with vertex 0 pinned to A and feeds (mask, F, |A|) to the sink.
template <typename Sink>
void scan_cuts(const SimplicialComplex& X, int n, bool prune, Sink&& sink,
               std::uint64_t lo, std::uint64_t hi) {
    const int nv = X.num_vertices();
    const std::uint32_t full = (nv == 32) ? ~0u : ((1u << nv) - 1);
    const auto faces = top_face_masks(X, n);
    const auto& adj = X.skeleton_masks();
    for (std::uint64_t rest = lo; rest < hi; ++rest) {
        const std::uint32_t amask =
            (static_cast<std::uint32_t>(rest) << 1) | 1u;
        if (prune && (!mask_connected(adj, amask) ||
                      !mask_connected(adj, full & ~amask)))
            continue;
        const int a = __builtin_popcount(amask);
        sink(amask, crossing_faces(faces, amask, full), a);
    }
}

Cut candidate_to_cut(const Candidate& best, int nv) {
    Cut cut;
    cut.side_a = mask_to_set(best.mask);
    cut.crossing = best.crossing;
    cut.value = Rational(BigInt(nv) * best.crossing,
                         BigInt(best.a_size) * (nv - best.a_size));
    return cut;
}

void require_pure_connected(const SimplicialComplex& X, const char* who) {
    const auto v = X.validate();
    if (!v.pure)
        throw std::invalid_argument(std::string(who) + ": complex is not pure");
    if (!v.connected)
        throw std::invalid_argument(std::string(who) +
                                    ": complex is not connected");
}

std::vector<std::uint32_t> graph_adj_masks(const AdjacencyMatrix& g) {
    std::vector<std::uint32_t> adj(g.order, 0);
    for (int i = 0; i < g.order; ++i)
        for (int j = 0; j < g.order; ++j)
            if (g.entries[i][j]) adj[i] |= 1u << j;
    return adj;
}

long long crossing_edges(const std::vector<std::uint32_t>& adj,
                         std::uint32_t amask, std::uint32_t full) {
    long long count = 0;
    std::uint32_t m = amask;
    while (m) {
        const int v = __builtin_ctz(m);
        m &= m - 1;
        count += __builtin_popcount(adj[v] & full & ~amask);
    }
    return count;
}

} // namespace

Cut exact_H(const SimplicialComplex& complex, const ExactOptions& options) {
    require_pure_connected(complex, "exact_H");
    const int nv = complex.num_vertices();
    if (nv < 2)
        throw std::invalid_argument("exact_H: need at least 2 vertices");
    if (nv > options.max_vertices)
        throw std::runtime_error("exact_H: vertex budget exceeded");
    const int n = complex.validate().dimension;
    const bool prune = options.prune_connected && n == 2;

    const std::uint64_t range = (1ull << (nv - 1)) - 1; // rest != all-ones
    const int workers = std::max(1, options.workers);
    std::vector<Candidate> partial(workers);

    auto run = [&](int w) {
        const std::uint64_t lo = range * w / workers;
        const std::uint64_t hi = range * (w + 1) / workers;
        Candidate& best = partial[w];
        scan_cuts(
            complex, n, prune,
            [&](std::uint32_t amask, long long f, int a) {
                Candidate c{f, a, amask, true};
                merge_candidate(best, c, nv);
            },
            lo, hi);
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    Candidate best;
    for (const auto& c : partial) merge_candidate(best, c, nv);
    if (!best.valid)
        throw std::logic_error("exact_H: empty search space");
    return candidate_to_cut(best, nv);
}

std::vector<std::vector<int>> all_minimizing_cuts(const SimplicialComplex& complex,
                                                  int max_vertices) {
    ExactOptions opt;
    opt.max_vertices = max_vertices;
    const Cut best = exact_H(complex, opt);
    const int nv = complex.num_vertices();
    const int n = complex.validate().dimension;
    const long long best_f = best.crossing;
    const int best_a = static_cast<int>(best.side_a.size());

    std::vector<std::vector<int>> out;
    const std::uint64_t range = (1ull << (nv - 1)) - 1;
    const std::uint32_t full = (nv == 32) ? ~0u : ((1u << nv) - 1);
    scan_cuts(
        complex, n, false,
        [&](std::uint32_t amask, long long f, int a) {
            if (value_equal(f, a, best_f, best_a, nv)) {
                out.push_back(mask_to_set(amask));
                out.push_back(mask_to_set(full & ~amask));
            }
        },
        0, range);
    std::sort(out.begin(), out.end());
    return out;
}

Cut exact_h_graph(const AdjacencyMatrix& graph, int max_order, int workers) {
    if (!graph.is_symmetric())
        throw std::invalid_argument("exact_h_graph: matrix is not symmetric");
    if (!graph.is_connected())
        throw std::invalid_argument("exact_h_graph: graph is not connected");
    const int nv = graph.order;
    if (nv < 2)
        throw std::invalid_argument("exact_h_graph: need at least 2 vertices");
    if (nv > max_order)
        throw std::runtime_error("exact_h_graph: order budget exceeded");

    const auto adj = graph_adj_masks(graph);
    const std::uint32_t full = (nv == 32) ? ~0u : ((1u << nv) - 1);
    const std::uint64_t range = (1ull << (nv - 1)) - 1;
    const int nworkers = std::max(1, workers);
    std::vector<Candidate> partial(nworkers);

    auto run = [&](int w) {
        const std::uint64_t lo = range * w / nworkers;
        const std::uint64_t hi = range * (w + 1) / nworkers;
        Candidate& best = partial[w];
        for (std::uint64_t rest = lo; rest < hi; ++rest) {
            const std::uint32_t amask =
                (static_cast<std::uint32_t>(rest) << 1) | 1u;
            Candidate c{crossing_edges(adj, amask, full),
                        __builtin_popcount(amask), amask, true};
            merge_candidate(best, c, nv);
        }
    };
    if (nworkers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    Candidate best;
    for (const auto& c : partial) merge_candidate(best, c, nv);
    return candidate_to_cut(best, nv);
}

Rational phi_graph(const AdjacencyMatrix& graph, int max_order) {
    if (!graph.is_symmetric())
        throw std::invalid_argument("phi_graph: matrix is not symmetric");
    if (!graph.is_connected())
        throw std::invalid_argument("phi_graph: graph is not connected");
    const int nv = graph.order;
    if (nv < 2)
        throw std::invalid_argument("phi_graph: need at least 2 vertices");
    if (nv > max_order)
        throw std::runtime_error("phi_graph: order budget exceeded");

    const auto adj = graph_adj_masks(graph);
    const std::uint32_t full = (nv == 32) ? ~0u : ((1u << nv) - 1);
    long long best_e = -1;
    int best_a = 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        const int a = __builtin_popcount(mask);
        if (2 * a >= nv) continue; // strict |A| < |V|/2
        const long long e = crossing_edges(adj, mask, full);
        if (best_e < 0 || e * best_a < best_e * a) {
            best_e = e;
            best_a = a;
        }
    }
    if (best_e < 0)
        throw std::logic_error("phi_graph: empty search space");
    return make_rational(best_e, best_a);
}

Rational prt_h(const SimplicialComplex& complex, int max_vertices) {
    const auto v = complex.validate();
    if (!v.pure)
        throw std::invalid_argument("prt_h: complex is not pure");
    const int d = v.dimension;
    const int nv = complex.num_vertices();
    if (nv <= d)
        throw std::invalid_argument("prt_h: not enough vertices for d+1 parts");
    if (nv > max_vertices)
        throw std::runtime_error("prt_h: vertex budget exceeded");

    const int parts = d + 1;
    const auto& faces = complex.k_faces(d);
    std::vector<int> assign(nv, 0); // assign[0] pinned to part 0

    bool found = false;
    Rational best;
    while (true) {
        // all parts nonempty?
        unsigned used = 0;
        for (int i = 0; i < nv; ++i) used |= 1u << assign[i];
        if (used == (1u << parts) - 1) {
            long long f = 0;
            for (const auto& face : faces) {
                unsigned seen = 0;
                for (int u : face) seen |= 1u << assign[u];
                if (static_cast<int>(__builtin_popcount(seen)) == parts) ++f;
            }
            long long prod = 1;
            std::vector<int> sizes(parts, 0);
            for (int i = 0; i < nv; ++i) ++sizes[assign[i]];
            for (int s : sizes) prod *= s;
            Rational val(BigInt(nv) * f, BigInt(prod));
            if (!found || val < best) {
                best = val;
                found = true;
            }
        }
        // next assignment, vertex 0 fixed
        int pos = nv - 1;
        while (pos >= 1 && assign[pos] == parts - 1) assign[pos--] = 0;
        if (pos < 1) break;
        ++assign[pos];
    }
    if (!found)
        throw std::logic_error("prt_h: no admissible partition");
    return best;
}

double bound_2d(const ComplexProfile& profile, double lambda) {
    if (profile.dimension != 2)
        throw std::invalid_argument("bound_2d: dimension must be 2");
    if (!profile.degree_D)
        throw std::invalid_argument("bound_2d: non-constant codim-1 degree");
    return static_cast<double>(profile.num_vertices) * profile.delta_min *
           (2.0 * *profile.degree_D - lambda) / (4.0 * profile.num_codim1);
}

double bound_nd(const ComplexProfile& profile, double lambda) {
    const int n = profile.dimension;
    if (n < 3)
        throw std::invalid_argument("bound_nd: dimension must be >= 3");
    if (!profile.degree_D)
        throw std::invalid_argument("bound_nd: non-constant codim-1 degree");
    const int k = (n + 1) / 2;
    return 2.0 * profile.delta_min * (n * *profile.degree_D - lambda) /
           (static_cast<double>(profile.num_codim1) * n * k * (n + 1 - k));
}

std::pair<double, double> graph_bounds(int d, double lambda) {
    if (d < 1) throw std::invalid_argument("graph_bounds: degree must be >= 1");
    const double gap = d - lambda;
    return {gap, 2.0 * std::sqrt(2.0 * d * gap)};
}

namespace {

WitnessB build_witness(const SimplicialComplex& X, const std::vector<int>& A,
                       int n, bool two_dim) {
    const int nv = X.num_vertices();
    std::uint32_t amask = 0;
    for (int v : A) {
        if (v < 0 || v >= nv)
            throw std::invalid_argument("witness: vertex index out of range");
        amask |= 1u << v;
    }
    const int a = __builtin_popcount(amask);
    if (a == 0 || a != static_cast<int>(A.size()) || a == nv)
        throw std::invalid_argument("witness: A must be a nonempty proper subset");

    const auto profile = X.profile();
    const auto& codim1 = X.k_faces(n - 1);
    const std::uint32_t full = (nv == 32) ? ~0u : ((1u << nv) - 1);
    const std::uint32_t cmask = full & ~amask;

    // B: codim-1 faces inside A, plus the first face meeting both sides.
    std::vector<char> in_b(codim1.size(), 0);
    int first_crossing = -1;
    for (size_t i = 0; i < codim1.size(); ++i) {
        std::uint32_t fm = 0;
        for (int u : codim1[i]) fm |= 1u << u;
        if ((fm & cmask) == 0) in_b[i] = 1;
        else if ((fm & amask) && first_crossing < 0)
            first_crossing = static_cast<int>(i);
    }
    if (first_crossing < 0)
        throw std::invalid_argument("witness: no crossing codim-1 face");
    in_b[first_crossing] = 1;

    const auto graph = build_embedded_graph(X);
    long long eb = 0;
    for (const auto& [x, y] : graph.edges)
        if (in_b[x] != in_b[y]) ++eb;

    const long long f = crossing_faces(top_face_masks(X, n), amask, full);
    const long long b_size =
        std::count(in_b.begin(), in_b.end(), static_cast<char>(1));
    const long long w_minus_b = static_cast<long long>(codim1.size()) - b_size;

    WitnessB w;
    for (size_t i = 0; i < in_b.size(); ++i)
        if (in_b[i]) w.side_b.push_back(static_cast<int>(i));

    auto add = [&](const std::string& name, Rational lhs, Rational rhs) {
        WitnessCheck c{name, std::move(lhs), std::move(rhs), false};
        c.pass = c.lhs <= c.rhs;
        w.checks.push_back(std::move(c));
    };
    if (two_dim) {
        add("|E(B,W\\B)|/2 <= |F(A,V\\A)|", make_rational(eb, 2),
            Rational(f));
        add("|A| <= |B|", Rational(a), Rational(b_size));
        add("|V\\A| <= 2|W\\B|/delta_min", Rational(nv - a),
            make_rational(2 * w_minus_b, profile.delta_min));
    } else {
        const int k = (n + 1) / 2;
        add("|E(B,W\\B)| <= k(n+1-k)|F(A,V\\A)|", Rational(eb),
            Rational(BigInt(k) * (n + 1 - k) * f));
        add("1 <= |B|", Rational(1), Rational(b_size));
        add("|V\\A| <= n|W\\B|/delta_min", Rational(nv - a),
            make_rational(n * w_minus_b, profile.delta_min));
    }
    w.all_pass = std::all_of(w.checks.begin(), w.checks.end(),
                             [](const WitnessCheck& c) { return c.pass; });
    return w;
}

} // namespace

WitnessB witness_B_2d(const SimplicialComplex& complex,
                      const std::vector<int>& A) {
    const auto v = complex.validate();
    if (!v.pure || v.dimension != 2)
        throw std::invalid_argument("witness_B_2d: need a pure 2-dimensional complex");
    return build_witness(complex, A, 2, true);
}

WitnessB witness_B_nd(const SimplicialComplex& complex,
                      const std::vector<int>& A) {
    const auto v = complex.validate();
    if (!v.pure || v.dimension < 3)
        throw std::invalid_argument("witness_B_nd: need a pure complex of dimension >= 3");
    return build_witness(complex, A, v.dimension, false);
}

bool claim41_check(int n) {
    if (n < 1) throw std::invalid_argument("claim41_check: n must be >= 1");
    if (n > 12) throw std::runtime_error("claim41_check: n too large");
    const int m = n + 1; // vertices of the n-simplex
    const std::uint32_t full = (1u << m) - 1;
    for (std::uint32_t p = 1; p < full; ++p) {
        // (n-1)-faces are complements of single vertices; the face misses
        // both sides iff removing u empties P or Q.
        int cnt = 0;
        const std::uint32_t q = full & ~p;
        for (int u = 0; u < m; ++u) {
            const std::uint32_t bit = 1u << u;
            if ((p & ~bit) && (q & ~bit)) ++cnt;
        }
        if (cnt != n && cnt != n + 1) return false;
    }
    return true;
}

bool minimizers_connected(const SimplicialComplex& complex, int max_vertices) {
    const auto v = complex.validate();
    if (!v.pure || v.dimension != 2)
        throw std::invalid_argument("minimizers_connected: need a pure 2-dimensional complex");
    for (const auto& A : all_minimizing_cuts(complex, max_vertices))
        if (!complex.induced_subgraph_connected(A)) return false;
    return true;
}

BoundReport full_report(const SimplicialComplex& complex,
                        const ReportOptions& options) {
    require_pure_connected(complex, "full_report");
    BoundReport r;
    r.tol = options.tol;
    r.profile = complex.profile();
    const int n = r.profile.dimension;
    r.k = (n + 1) / 2;

    const auto graph = build_embedded_graph(complex);
    r.embedded_order = graph.order();
    r.embedded_edges = static_cast<int>(graph.edges.size());
    r.embedded_connected = graph.is_connected();
    r.vacuous = !r.embedded_connected;

    if (r.embedded_order >= 2) {
        const auto spectrum =
            eigenvalues_symmetric(adjacency_matrix(graph), std::max(options.tol, 1e-9));
        r.lambda = second_largest(spectrum);
    }

    const bool bound_ok = r.profile.degree_D.has_value() && n >= 2 &&
                          r.embedded_order >= 2;
    if (bound_ok)
        r.lower_bound = (n == 2) ? bound_2d(r.profile, r.lambda)
                                 : bound_nd(r.profile, r.lambda);

    const bool exact_ok = complex.num_vertices() <= options.max_vertices;
    if (exact_ok) {
        ExactOptions eo;
        eo.max_vertices = options.max_vertices;
        eo.prune_connected = options.prune_connected;
        eo.workers = options.workers;
        r.exact_cut = exact_H(complex, eo);
        if (n == 2)
            r.witness = witness_B_2d(complex, r.exact_cut->side_a);
        else if (n >= 3)
            r.witness = witness_B_nd(complex, r.exact_cut->side_a);
    }

    if (options.with_prt &&
        complex.num_vertices() <= options.prt_max_vertices)
        r.prt = prt_h(complex, options.prt_max_vertices);

    const std::string theorem = (n == 2) ? "theorem_1_2" : "theorem_1_3";
    if (!bound_ok) {
        const std::string why = !r.profile.degree_D
                                    ? "non-constant codim-1 degree D"
                                    : "dimension below 2";
        r.verdicts.push_back({(n >= 2 ? theorem : "theorem_1_2"),
                              "not applicable", why});
    } else if (r.exact_cut) {
        const double h = to_double(r.exact_cut->value);
        const bool pass = *r.lower_bound <= h + options.tol;
        r.equality = pass && std::abs(*r.lower_bound - h) <= options.tol;
        std::string detail = "bound " + std::to_string(*r.lower_bound) +
                             " <= H " + to_string(r.exact_cut->value);
        if (r.vacuous) detail += " (vacuous: disconnected embedded graph)";
        r.verdicts.push_back({theorem, pass ? "pass" : "fail", detail});
    } else {
        r.verdicts.push_back(
            {theorem, "bound only", "exact H over vertex budget"});
    }

    const std::string lemma = (n == 2) ? "lemma_3_2" : "lemma_4_2";
    if (r.witness) {
        r.verdicts.push_back({lemma, r.witness->all_pass ? "pass" : "fail",
                              "witness B at the minimizing A"});
    } else if (n >= 2) {
        r.verdicts.push_back({lemma, "not applicable", "no exact minimizer"});
    }

    if (n == 2 && r.exact_cut) {
        const bool mc = minimizers_connected(complex, options.max_vertices);
        r.verdicts.push_back({"lemma_3_1", mc ? "pass" : "fail",
                              "all minimizing sides induce connected subgraphs"});
    }
    return r;
}

} // namespace cheeger
