#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cheeger/cheeger.hpp"
#include "cheeger/corpus.hpp"
#include "oracle.hpp"

using cheeger::exact_H;
using cheeger::make_rational;
using cheeger::Rational;
using cheeger::SimplicialComplex;

namespace {

cheeger::AdjacencyMatrix cycle_graph(int m) {
    cheeger::AdjacencyMatrix g;
    g.order = m;
    g.entries.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
        g.entries[i][(i + 1) % m] = 1;
        g.entries[(i + 1) % m][i] = 1;
    }
    return g;
}

std::vector<SimplicialComplex> small_corpus() {
    std::vector<SimplicialComplex> out;
    for (int n = 2; n <= 4; ++n) out.push_back(cheeger::gen_simplex_closure(n));
    for (int m = 3; m <= 5; ++m) out.push_back(cheeger::gen_boundary_simplex(m));
    for (int m = 3; m <= 7; ++m) out.push_back(cheeger::gen_bipyramid(m));
    for (int m = 3; m <= 6; ++m) out.push_back(cheeger::gen_complete_skeleton(m));
    return out;
}

} // namespace

TEST_CASE("exact_H of the single 2-simplex is 3/2 at a singleton") {
    auto cut = exact_H(cheeger::gen_simplex_closure(2));
    CHECK(cut.value == make_rational(3, 2));
    CHECK(cut.side_a == std::vector<int>{0});
    CHECK(cut.crossing == 1);
}

TEST_CASE("exact_H of the tetrahedron boundary is 4") {
    auto cut = exact_H(cheeger::gen_boundary_simplex(3));
    CHECK(cut.value == Rational(4));
}

TEST_CASE("exact_H of the 4-simplex boundary is 25/6 with all facets crossing") {
    auto cut = exact_H(cheeger::gen_boundary_simplex(4));
    CHECK(cut.value == make_rational(25, 6));
    CHECK(cut.side_a.size() == 2);
    CHECK(cut.crossing == 5);
}

TEST_CASE("exact_H of the hexagonal bipyramid is 4") {
    // Oracle-verified: delta_min = 4 and a minimizing cut splits off two
    // adjacent equator vertices (|A| = 6, F = 6, value 8*6/12 = 4).
    auto cut = exact_H(cheeger::gen_bipyramid(6));
    CHECK(cut.value == Rational(4));
}

TEST_CASE("exact_H agrees with the independent oracle on the small corpus") {
    for (const auto& X : small_corpus())
        CHECK(exact_H(X).value == oracle::naive_H(X));
}

TEST_CASE("exact_H guard and input errors") {
    cheeger::ExactOptions tight;
    tight.max_vertices = 3;
    CHECK_THROWS_AS(exact_H(cheeger::gen_boundary_simplex(4), tight),
                    std::runtime_error);
    auto nonpure = SimplicialComplex::from_facets({{"0", "1", "2"}, {"3", "4"}});
    CHECK_THROWS_AS(exact_H(nonpure), std::invalid_argument);
}

TEST_CASE("pruned search matches the unpruned search on 2-dim corpus complexes") {
    for (const auto& X : small_corpus()) {
        if (X.dimension() != 2) continue;
        cheeger::ExactOptions pruned;
        pruned.prune_connected = true;
        auto a = exact_H(X);
        auto b = exact_H(X, pruned);
        CHECK(a.value == b.value);
        CHECK(a.side_a == b.side_a);
    }
}

TEST_CASE("parallel and serial searches agree bit-exactly") {
    for (const auto& X : small_corpus()) {
        cheeger::ExactOptions par;
        par.workers = 4;
        auto a = exact_H(X);
        auto b = exact_H(X, par);
        CHECK(a.value == b.value);
        CHECK(a.side_a == b.side_a);
        CHECK(a.crossing == b.crossing);
    }
}

TEST_CASE("exact_H value invariant under vertex relabeling") {
    auto base = cheeger::gen_bipyramid(6);
    auto v0 = exact_H(base).value;
    std::mt19937 rng(23);
    std::vector<std::string> names;
    for (int i = 0; i < base.num_vertices(); ++i)
        names.push_back("v" + std::to_string(i));
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(names.begin(), names.end(), rng);
        std::vector<std::vector<std::string>> relabeled;
        for (const auto& f : base.facets()) {
            std::vector<std::string> g;
            for (int v : f) g.push_back(names[v]);
            relabeled.push_back(g);
        }
        CHECK(exact_H(SimplicialComplex::from_facets(relabeled)).value == v0);
    }
}

TEST_CASE("exact_h_graph frozen values") {
    auto k3 = cheeger::adjacency_matrix(
        cheeger::build_embedded_graph(cheeger::gen_simplex_closure(2)));
    CHECK(cheeger::exact_h_graph(k3).value == Rational(3));
    CHECK(cheeger::exact_h_graph(cycle_graph(4)).value == Rational(2));
    auto octa = cheeger::adjacency_matrix(
        cheeger::build_embedded_graph(cheeger::gen_boundary_simplex(3)));
    CHECK(cheeger::exact_h_graph(octa).value == Rational(4));
}

TEST_CASE("exact_h_graph agrees with the oracle on corpus embedded graphs") {
    for (const auto& X : small_corpus()) {
        auto g = cheeger::build_embedded_graph(X);
        if (!g.is_connected() || g.order() > 18) continue;
        auto m = cheeger::adjacency_matrix(g);
        CHECK(cheeger::exact_h_graph(m).value == oracle::naive_h(m));
    }
}

TEST_CASE("exact_h_graph rejects disconnected graphs") {
    cheeger::AdjacencyMatrix two;
    two.order = 2;
    two.entries = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(cheeger::exact_h_graph(two), std::invalid_argument);
}

TEST_CASE("phi_graph frozen values and oracle agreement") {
    auto k3 = cheeger::adjacency_matrix(
        cheeger::build_embedded_graph(cheeger::gen_simplex_closure(2)));
    CHECK(cheeger::phi_graph(k3) == Rational(2));
    // |A| < |V|/2 is strict, so only singletons are admissible on C4.
    CHECK(cheeger::phi_graph(cycle_graph(4)) == Rational(2));
    CHECK(cheeger::phi_graph(cycle_graph(4)) == oracle::naive_phi(cycle_graph(4)));
    auto octa = cheeger::adjacency_matrix(
        cheeger::build_embedded_graph(cheeger::gen_boundary_simplex(3)));
    CHECK(cheeger::phi_graph(octa) == oracle::naive_phi(octa));
    CHECK(cheeger::phi_graph(octa) == Rational(3)); // adjacent pair, 6 edges / 2
}

TEST_CASE("phi <= h <= 2*phi on connected corpus embedded graphs") {
    for (const auto& X : small_corpus()) {
        auto g = cheeger::build_embedded_graph(X);
        if (!g.is_connected() || g.order() > 20) continue;
        auto m = cheeger::adjacency_matrix(g);
        auto phi = cheeger::phi_graph(m);
        auto h = cheeger::exact_h_graph(m).value;
        CHECK(phi <= h);
        CHECK(h <= 2 * phi);
    }
}

TEST_CASE("prt_h examples") {
    CHECK(cheeger::prt_h(cheeger::gen_simplex_closure(2)) == Rational(3));
    // Partition {0}, {1,2}, {3} leaves no face with one vertex in every part,
    // so the minimum is 0.
    auto glued = SimplicialComplex::from_facets({{"0", "1", "2"}, {"1", "2", "3"}});
    CHECK(cheeger::prt_h(glued) == Rational(0));
    CHECK(cheeger::prt_h(cheeger::gen_complete_skeleton(4)) == Rational(4));
    CHECK_THROWS_AS(cheeger::prt_h(cheeger::gen_bipyramid(11)),
                    std::runtime_error); // 13 vertices, over the guard
}

TEST_CASE("bound_2d formula values") {
    cheeger::ComplexProfile p;
    p.dimension = 2;
    p.num_vertices = 3;
    p.num_codim1 = 3;
    p.degree_D = 1;
    p.delta_min = 2;
    CHECK(cheeger::bound_2d(p, -1.0) == doctest::Approx(1.5).epsilon(1e-12));

    p.num_vertices = 8;
    p.num_codim1 = 18;
    p.degree_D = 2;
    p.delta_min = 3;
    CHECK(cheeger::bound_2d(p, 1.0 + std::sqrt(5.0)) ==
          doctest::Approx((3.0 - std::sqrt(5.0)) / 3.0).epsilon(1e-12));

    p.num_vertices = 4;
    p.num_codim1 = 6;
    p.degree_D = 2;
    p.delta_min = 3;
    CHECK(cheeger::bound_2d(p, 0.0) == doctest::Approx(2.0).epsilon(1e-12));

    p.degree_D.reset();
    CHECK_THROWS_AS(cheeger::bound_2d(p, 0.0), std::invalid_argument);
}

TEST_CASE("bound_nd formula values") {
    cheeger::ComplexProfile p;
    p.dimension = 3;
    p.num_vertices = 5;
    p.num_codim1 = 10;
    p.degree_D = 2;
    p.delta_min = 6;
    CHECK(cheeger::bound_nd(p, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

    p.num_vertices = 4;
    p.num_codim1 = 4;
    p.degree_D = 1;
    p.delta_min = 3;
    CHECK(cheeger::bound_nd(p, -1.0) == doctest::Approx(0.5).epsilon(1e-12));

    p.dimension = 4;
    p.num_vertices = 5;
    p.num_codim1 = 5;
    p.degree_D = 1;
    p.delta_min = 4;
    CHECK(cheeger::bound_nd(p, -1.0) == doctest::Approx(1.0 / 3).epsilon(1e-12));

    p.dimension = 2;
    CHECK_THROWS_AS(cheeger::bound_nd(p, 0.0), std::invalid_argument);
}

TEST_CASE("graph_bounds") {
    auto [lo1, hi1] = cheeger::graph_bounds(2, -1.0);
    CHECK(lo1 == doctest::Approx(3.0));
    CHECK(hi1 == doctest::Approx(2.0 * std::sqrt(12.0)));
    auto [lo2, hi2] = cheeger::graph_bounds(4, 0.0);
    CHECK(lo2 == doctest::Approx(4.0));
    CHECK(hi2 == doctest::Approx(2.0 * std::sqrt(32.0)));
    auto [lo3, hi3] = cheeger::graph_bounds(6, 1.0);
    CHECK(lo3 == doctest::Approx(5.0));
    CHECK(hi3 == doctest::Approx(2.0 * std::sqrt(60.0)));
}

TEST_CASE("witness_B_2d hand-checked examples") {
    SUBCASE("single 2-simplex, A={0}") {
        auto w = cheeger::witness_B_2d(cheeger::gen_simplex_closure(2), {0});
        CHECK(w.all_pass);
        REQUIRE(w.checks.size() == 3);
        CHECK(w.checks[0].lhs == Rational(1));
        CHECK(w.checks[0].rhs == Rational(1));
        CHECK(w.checks[1].lhs == Rational(1));
        CHECK(w.checks[1].rhs == Rational(1));
        CHECK(w.checks[2].lhs == Rational(2));
        CHECK(w.checks[2].rhs == Rational(2));
        CHECK(w.side_b == std::vector<int>{0}); // edge {0,1}
    }
    SUBCASE("tetrahedron boundary, A={0}") {
        auto w = cheeger::witness_B_2d(cheeger::gen_boundary_simplex(3), {0});
        CHECK(w.all_pass);
        CHECK(w.checks[0].lhs == Rational(2));
        CHECK(w.checks[0].rhs == Rational(3));
        CHECK(w.checks[1].lhs == Rational(1));
        CHECK(w.checks[1].rhs == Rational(1));
        CHECK(w.checks[2].lhs == Rational(3));
        CHECK(w.checks[2].rhs == make_rational(10, 3));
    }
    SUBCASE("hexagonal bipyramid, A={north apex}") {
        auto X = cheeger::gen_bipyramid(6);
        auto w = cheeger::witness_B_2d(X, {X.vertex_index("6")});
        CHECK(w.all_pass);
    }
}

TEST_CASE("witness_B_nd hand-checked examples") {
    SUBCASE("single 3-simplex, A={0}") {
        auto w = cheeger::witness_B_nd(cheeger::gen_simplex_closure(3), {0});
        CHECK(w.all_pass);
        CHECK(w.checks[0].lhs == Rational(3));
        CHECK(w.checks[0].rhs == Rational(4));
        CHECK(w.checks[1].lhs == Rational(1));
        CHECK(w.checks[1].rhs == Rational(1));
        CHECK(w.checks[2].lhs == Rational(3));
        CHECK(w.checks[2].rhs == Rational(3));
    }
    SUBCASE("4-simplex boundary, A={0,1}") {
        auto w = cheeger::witness_B_nd(cheeger::gen_boundary_simplex(4), {0, 1});
        CHECK(w.all_pass);
        CHECK(w.checks[0].lhs == Rational(6));
        CHECK(w.checks[0].rhs == Rational(20));
        CHECK(w.checks[1].rhs == Rational(1));
        CHECK(w.checks[2].lhs == Rational(3));
        CHECK(w.checks[2].rhs == make_rational(9, 2));
    }
    SUBCASE("single 4-simplex, A={0}") {
        CHECK(cheeger::witness_B_nd(cheeger::gen_simplex_closure(4), {0}).all_pass);
    }
}

TEST_CASE("witness inequalities hold at every minimizing A on the corpus") {
    for (const auto& X : small_corpus()) {
        const int n = X.dimension();
        if (n < 2) continue;
        for (const auto& A : cheeger::all_minimizing_cuts(X)) {
            auto w = (n == 2) ? cheeger::witness_B_2d(X, A)
                              : cheeger::witness_B_nd(X, A);
            CHECK(w.all_pass);
        }
    }
}

TEST_CASE("witness input validation") {
    auto X = cheeger::gen_simplex_closure(2);
    CHECK_THROWS_AS(cheeger::witness_B_2d(X, {}), std::invalid_argument);
    CHECK_THROWS_AS(cheeger::witness_B_2d(X, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(cheeger::witness_B_nd(X, {0}), std::invalid_argument);
    CHECK_THROWS_AS(cheeger::witness_B_2d(cheeger::gen_simplex_closure(3), {0}),
                    std::invalid_argument);
}

TEST_CASE("claim41_check") {
    // n = 1 is degenerate: splitting the edge's two vertices leaves no vertex
    // (0-face) that meets both sides, so the count is 0, not in {1, 2}.
    CHECK_FALSE(cheeger::claim41_check(1));
    for (int n = 2; n <= 10; ++n) CHECK(cheeger::claim41_check(n));
    CHECK_THROWS_AS(cheeger::claim41_check(0), std::invalid_argument);
    CHECK_THROWS_AS(cheeger::claim41_check(13), std::runtime_error);
}

TEST_CASE("minimizers_connected on 2-dim corpus complexes") {
    CHECK(cheeger::minimizers_connected(cheeger::gen_simplex_closure(2)));
    CHECK(cheeger::minimizers_connected(cheeger::gen_boundary_simplex(3)));
    CHECK(cheeger::minimizers_connected(cheeger::gen_bipyramid(6)));
}

TEST_CASE("cut value invariant under complementation") {
    auto X = cheeger::gen_bipyramid(5);
    const int nv = X.num_vertices();
    const auto& faces = X.k_faces(2);
    // check a handful of subsets directly
    for (std::uint32_t mask : {0x3u, 0x15u, 0x41u, 0x2Au}) {
        std::vector<char> in_a(nv, 0), in_b(nv, 0);
        for (int v = 0; v < nv; ++v) {
            in_a[v] = (mask >> v) & 1;
            in_b[v] = !in_a[v];
        }
        CHECK(oracle::count_crossing_faces(faces, in_a) ==
              oracle::count_crossing_faces(faces, in_b));
    }
}

TEST_CASE("full_report composition") {
    SUBCASE("single 2-simplex achieves equality") {
        auto r = cheeger::full_report(cheeger::gen_simplex_closure(2));
        REQUIRE(r.lower_bound.has_value());
        CHECK(*r.lower_bound == doctest::Approx(1.5).epsilon(1e-9));
        REQUIRE(r.exact_cut.has_value());
        CHECK(r.exact_cut->value == make_rational(3, 2));
        CHECK(r.equality);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->all_pass);
        for (const auto& v : r.verdicts) CHECK(v.status != "fail");
    }
    SUBCASE("tetrahedron boundary: bound 2 <= H 4") {
        auto r = cheeger::full_report(cheeger::gen_boundary_simplex(3));
        CHECK(*r.lower_bound == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(r.exact_cut->value == Rational(4));
        CHECK_FALSE(r.equality);
    }
    SUBCASE("4-simplex boundary: bound 0.5 <= H 25/6") {
        auto r = cheeger::full_report(cheeger::gen_boundary_simplex(4));
        CHECK(*r.lower_bound == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(r.exact_cut->value == make_rational(25, 6));
    }
    SUBCASE("disconnected embedded graph is reported vacuous, not an error") {
        auto X = SimplicialComplex::from_facets({{"0", "1", "2"}, {"2", "3", "4"}});
        auto r = cheeger::full_report(X);
        CHECK(r.vacuous);
        CHECK(*r.lower_bound == doctest::Approx(0.0).epsilon(1e-9));
        for (const auto& v : r.verdicts) CHECK(v.status != "fail");
    }
}
