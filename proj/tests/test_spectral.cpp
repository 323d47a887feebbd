#include <doctest.h>

#include <cmath>
#include <numeric>

#include "coblab/spectral.hpp"

using namespace coblab;

namespace {

Graph random_graph(int n, double density, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < density) edges.emplace_back(u, v);
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("laplacian entries") {
    const Graph path(3, {{0, 1}, {1, 2}});
    const auto L = laplacian(path);
    // [[1,-1,0],[-1,2,-1],[0,-1,1]]
    CHECK(L[0] == 1.0);
    CHECK(L[1] == -1.0);
    CHECK(L[2] == 0.0);
    CHECK(L[4] == 2.0);
    CHECK(L[5] == -1.0);
    CHECK(L[8] == 1.0);
}

TEST_CASE("closed-form spectra") {
    // K_n: eigenvalues 0, n (multiplicity n-1)
    for (int n : {2, 3, 5, 8}) {
        const auto spec = laplacian_spectrum(Graph::complete(n));
        CHECK(spec.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(spec.mu == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
        CHECK(spec.eigenvalues.back() == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
    }

    // K_{a,b}: eigenvalues 0, a (b-1 times), b (a-1 times), a+b
    const auto spec = laplacian_spectrum(Graph::complete_bipartite(3, 4));
    CHECK(spec.mu == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(spec.eigenvalues.back() == doctest::Approx(7.0).epsilon(1e-9));

    // K_{n,n}: gap n
    CHECK(spectral_gap(Graph::complete_bipartite(5, 5)) == doctest::Approx(5.0).epsilon(1e-9));

    // path P_3: eigenvalues 0, 1, 3
    const auto p3 = laplacian_spectrum(Graph(3, {{0, 1}, {1, 2}}));
    CHECK(p3.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p3.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("disconnected graphs have zero gap") {
    const Graph two(4, {{0, 1}, {2, 3}});
    CHECK(spectral_gap(two) == doctest::Approx(0.0).epsilon(1e-9));
    // matching on 2n vertices: mu = 0
    const Graph matching(6, {{0, 3}, {1, 4}, {2, 5}});
    CHECK(spectral_gap(matching) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("QL and bisection spectra agree on random graphs") {
    Rng rng(61);
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 4 + static_cast<int>(rng.below(20));
        const auto g = random_graph(n, 0.4, rng);
        auto a = symmetric_eigenvalues(laplacian(g), n);
        auto b = symmetric_eigenvalues_bisection(laplacian(g), n);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7).scale(1.0));
        // trace identity: sum of eigenvalues = sum of degrees = 2|E|
        const double trace = std::accumulate(a.begin(), a.end(), 0.0);
        CHECK(trace == doctest::Approx(2.0 * g.edge_count()).epsilon(1e-7));
        // smallest eigenvalue is 0 with the all-ones vector
        CHECK(std::abs(a.front()) < 1e-7);
    }
}

TEST_CASE("minimum link gap over the canonical complexes") {
    // T_n links are K_{n,n}: every gap is n
    const auto report = min_link_gap(build_T(3));
    CHECK(report.min_gap == doctest::Approx(3.0).epsilon(1e-8));
    for (double mu : report.per_vertex) CHECK(mu == doctest::Approx(3.0).epsilon(1e-8));

    // Y(L) links are perfect matchings: every gap is 0
    const auto y = min_link_gap(build_Y(LatinSquare::cyclic(3)));
    CHECK(y.min_gap == doctest::Approx(0.0).epsilon(1e-9));

    // full 2-skeleton of the simplex: links are K_{n-1}, gap n - 1
    const auto s = min_link_gap(build_simplex_skeleton(6, 2));
    CHECK(s.min_gap == doctest::Approx(5.0).epsilon(1e-8));

    // threaded and serial runs agree
    const auto threaded = min_link_gap(build_T(4), 4);
    const auto serial = min_link_gap(build_T(4), 1);
    for (std::size_t v = 0; v < threaded.per_vertex.size(); ++v)
        CHECK(threaded.per_vertex[v] == doctest::Approx(serial.per_vertex[v]).epsilon(1e-12));
}

TEST_CASE("tanner bound holds on every subset of small random graphs") {
    Rng rng(62);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 5 + static_cast<int>(rng.below(6));
        const auto g = random_graph(n, 0.5, rng);
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<bool> in_s(n);
            for (int v = 0; v < n; ++v) in_s[v] = (mask >> v) & 1u;
            const auto check = tanner_check(g, in_s);
            CHECK(check.pass);
        }
    }
}

TEST_CASE("tanner bound is tight on balanced cuts of K_n") {
    // e(S, V-S) = |S||V-S| and mu = n, so the bound meets the cut exactly
    const auto k6 = Graph::complete(6);
    std::vector<bool> half{true, true, true, false, false, false};
    const auto check = tanner_check(k6, half);
    CHECK(check.cut == doctest::Approx(9.0));
    CHECK(check.bound == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(check.pass);
}
