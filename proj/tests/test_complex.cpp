#include <doctest.h>

#include <algorithm>
#include <set>

#include "coblab/complex2.hpp"

using namespace coblab;

TEST_CASE("complete tripartite complex face counts") {
    for (int n = 1; n <= 5; ++n) {
        const auto T = build_T(n);
        CHECK(T.vertex_count == 3 * n);
        CHECK(T.edge_count() == 3 * n * n);
        CHECK(T.triangle_count() == n * n * n);
        CHECK(T.face_count(-1) == 1);
        CHECK(T.face_count(0) == 3 * n);
        REQUIRE(T.tripartite.has_value());
        CHECK(T.tripartite->n == n);
    }
}

TEST_CASE("T_n has no edges inside a part") {
    const auto T = build_T(4);
    const TripartiteMeta& meta = *T.tripartite;
    for (auto [u, v] : T.edges) CHECK(meta.part(u) != meta.part(v));
    // every triangle has one vertex per part
    for (const auto& t : T.triangles) {
        std::set<TripartiteMeta::Part> parts{meta.part(t[0]), meta.part(t[1]), meta.part(t[2])};
        CHECK(parts.size() == 3);
    }
}

TEST_CASE("Y(L) triangles follow the square") {
    const auto square = LatinSquare::cyclic(4);
    const auto Y = build_Y(square);
    const int n = 4;
    CHECK(Y.vertex_count == 3 * n);
    CHECK(Y.edge_count() == 3 * n * n);  // full tripartite 1-skeleton
    CHECK(Y.triangle_count() == n * n);
    const TripartiteMeta& meta = *Y.tripartite;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int k = square.rows[i](j);
            CHECK(Y.triangle_index(meta.a(i), meta.b(j), meta.c(k)) >= 0);
        }
    CHECK(edge_degree_profile(Y).max == 1);
}

TEST_CASE("Y-union takes set semantics and bounds the edge degree") {
    const auto L = LatinSquare::cyclic(5);
    Rng rng(3);
    const auto M = sample_uniform(5, rng);

    const auto once = build_Y(L);
    const auto twice = build_Y_union({L, L});
    CHECK(twice.triangle_count() == once.triangle_count());

    const auto both = build_Y_union({L, M});
    CHECK(both.triangle_count() <= 50);
    CHECK(both.triangle_count() >= 25);
    CHECK(edge_degree_profile(both).max <= 2);

    // triangle set is exactly the union
    std::set<std::array<int, 3>> expected(once.triangles.begin(), once.triangles.end());
    const auto my = build_Y(M);
    expected.insert(my.triangles.begin(), my.triangles.end());
    CHECK(both.triangle_count() == static_cast<int>(expected.size()));
    for (const auto& t : both.triangles) CHECK(expected.count(t) == 1);
}

TEST_CASE("simplex skeleta") {
    const auto one = build_simplex_skeleton(6, 1);
    CHECK(one.vertex_count == 6);
    CHECK(one.edge_count() == 15);
    CHECK(one.triangle_count() == 0);

    const auto two = build_simplex_skeleton(6, 2);
    CHECK(two.edge_count() == 15);
    CHECK(two.triangle_count() == 20);

    CHECK_THROWS_AS(build_simplex_skeleton(6, 3), DimensionError);
}

TEST_CASE("random triangle model at the extremes") {
    Rng rng(17);
    const auto empty = build_Y2np(7, 0.0, rng);
    CHECK(empty.edge_count() == 21);
    CHECK(empty.triangle_count() == 0);

    const auto full = build_Y2np(7, 1.0, rng);
    CHECK(full.triangle_count() == 35);

    // p = 1/2: determinism in the RNG stream
    Rng a(5), b(5);
    const auto ca = build_Y2np(10, 0.5, a);
    const auto cb = build_Y2np(10, 0.5, b);
    CHECK(ca.triangles == cb.triangles);
    CHECK(ca.triangle_count() > 0);
    CHECK(ca.triangle_count() < 120);
}

TEST_CASE("downward closure is enforced") {
    CHECK_THROWS_AS(Complex2::from_faces(3, {{0, 1}, {1, 2}}, {{{0, 1, 2}}}),
                    InvariantError);
    const auto ok = Complex2::from_faces(3, {{0, 1}, {1, 2}, {0, 2}}, {{{0, 1, 2}}});
    CHECK(ok.triangle_count() == 1);
    // triangle_edges rows point at the three boundary edges
    const auto& te = ok.triangle_edges[0];
    std::set<int> idx(te.begin(), te.end());
    CHECK(idx.size() == 3);
    for (int e : idx) {
        CHECK(e >= 0);
        CHECK(e < 3);
    }
}

TEST_CASE("face lists are sorted and duplicate-free") {
    const auto Y = build_Y_union({LatinSquare::cyclic(4)});
    CHECK(std::is_sorted(Y.edges.begin(), Y.edges.end()));
    CHECK(std::adjacent_find(Y.edges.begin(), Y.edges.end()) == Y.edges.end());
    CHECK(std::is_sorted(Y.triangles.begin(), Y.triangles.end()));
    CHECK(std::adjacent_find(Y.triangles.begin(), Y.triangles.end()) == Y.triangles.end());
    for (const auto& t : Y.triangles) {
        CHECK(t[0] < t[1]);
        CHECK(t[1] < t[2]);
    }
}

TEST_CASE("links of the canonical complexes") {
    const int n = 3;

    // T_n: the link of any vertex is K_{n,n}
    const auto T = build_T(n);
    for (int v = 0; v < 3 * n; ++v) {
        const auto g = link(T, v);
        CHECK(g.vertex_count == 2 * n);
        CHECK(g.edge_count() == n * n);
        // bipartite n+n with all degrees n
        for (int u = 0; u < g.vertex_count; ++u) CHECK(g.degree(u) == n);
    }

    // Y(L): the link of a vertex is a perfect matching on 2n vertices
    const auto Y = build_Y(LatinSquare::cyclic(n));
    for (int v = 0; v < 3 * n; ++v) {
        const auto g = link(Y, v);
        CHECK(g.vertex_count == 2 * n);
        CHECK(g.edge_count() == n);
        for (int u = 0; u < g.vertex_count; ++u) CHECK(g.degree(u) == 1);
    }

    // full 2-skeleton of the simplex: links are K_{n-1}
    const auto S = build_simplex_skeleton(6, 2);
    for (int v = 0; v < 6; ++v) {
        const auto g = link(S, v);
        CHECK(g.vertex_count == 5);
        CHECK(g.edge_count() == 10);
    }
}

TEST_CASE("graph utilities") {
    const auto k4 = Graph::complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.connected());
    CHECK(k4.component_count() == 1);

    const auto b = Graph::complete_bipartite(2, 3);
    CHECK(b.vertex_count == 5);
    CHECK(b.edge_count() == 6);

    Graph two(4, {{0, 1}, {2, 3}});
    CHECK(!two.connected());
    CHECK(two.component_count() == 2);
    CHECK(two.cut_size({true, true, false, false}) == 0);
    CHECK(two.cut_size({true, false, true, false}) == 2);

    CHECK(k4.cut_size({true, false, false, false}) == 3);
    CHECK(k4.cut_size({true, true, false, false}) == 4);
}

TEST_CASE("edge degree histogram") {
    const auto S = build_simplex_skeleton(5, 2);
    const auto profile = edge_degree_profile(S);
    CHECK(profile.max == 3);  // each edge lies in n - 2 triangles
    REQUIRE(profile.histogram.size() == 4);
    CHECK(profile.histogram[3] == 10);
}
