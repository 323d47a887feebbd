#include <doctest.h>

#include <cmath>

#include "coblab/expansion.hpp"

using namespace coblab;

namespace {

// Oracle Cheeger constant: direct minimization of e(S, V-S) / min(|S|, |V-S|)
// over all nonempty proper subsets, with no shared code path.
double oracle_h0(const Graph& g) {
    const int n = g.vertex_count;
    double best = 1e18;
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<bool> in_s(n);
        int size = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) {
                in_s[v] = true;
                ++size;
            }
        const int denom = std::min(size, n - size);
        best = std::min(best, static_cast<double>(g.cut_size(in_s)) / denom);
    }
    return best;
}

}  // namespace

TEST_CASE("h0 of complete graphs") {
    // K_n: h0 = ceil(n/2), achieved by balanced cuts
    const auto k4 = h0_graph(Graph::complete(4));
    CHECK(k4.exact);
    CHECK(k4.value == Rational(2));
    const auto k5 = h0_graph(Graph::complete(5));
    CHECK(k5.value == Rational(3));
    const auto k6 = h0_graph(Graph::complete(6));
    CHECK(k6.value == Rational(3));
}

TEST_CASE("h0 matches an oracle on random graphs and witnesses are honest") {
    Rng rng(71);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = 4 + static_cast<int>(rng.below(6));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.uniform01() < 0.55) edges.emplace_back(u, v);
        const Graph g(n, edges);
        const auto report = h0_graph(g);
        CHECK(report.value.value() == doctest::Approx(oracle_h0(g)).epsilon(1e-12));
        // witness reproduces the reported ratio
        std::vector<bool> in_s(n, false);
        std::size_t size = 0;
        for (int v = 0; v < n; ++v)
            if (report.witness.get(v)) {
                in_s[v] = true;
                ++size;
            }
        CHECK(report.witness_coboundary_norm == static_cast<std::size_t>(g.cut_size(in_s)));
        CHECK(report.witness_coset_norm == std::min(size, n - size));
        CHECK(Rational(static_cast<std::int64_t>(report.witness_coboundary_norm),
                       static_cast<std::int64_t>(report.witness_coset_norm)) == report.value);
    }
}

TEST_CASE("h0 of a disconnected graph is zero") {
    const Graph two(5, {{0, 1}, {1, 2}, {3, 4}});
    const auto report = h0_graph(two);
    CHECK(report.value == Rational(0));
    CHECK(report.witness_coboundary_norm == 0);
}

TEST_CASE("exact h1 of the full 2-skeleton of small simplices") {
    // Known: h1 of the complete 2-skeleton on n vertices is at least n/3,
    // with equality-type behavior small; Delta_6 gives exactly 2.
    const auto d5 = h1_exact(build_simplex_skeleton(5, 2));
    CHECK(d5.exact);
    CHECK(d5.value >= Rational(5, 3));
    const auto d6 = h1_exact(build_simplex_skeleton(6, 2));
    CHECK(d6.value == Rational(2));
    // witness arithmetic is self-consistent
    CHECK(Rational(static_cast<std::int64_t>(d6.witness_coboundary_norm),
                   static_cast<std::int64_t>(d6.witness_coset_norm)) == d6.value);
}

TEST_CASE("exact h1 of T_2 and its vanishing behavior") {
    const auto report = h1_exact(build_T(2));
    CHECK(report.exact);
    CHECK(report.value >= Rational(2, 5));
    CHECK(report.value.num > 0);  // simply connected, so h1 > 0
    CHECK(cohomology_rank(build_T(2), 1) == 0);
}

TEST_CASE("h1 is zero exactly when reduced H^1 is nonzero") {
    // Y(L) cyclic n = 3 has nonvanishing H^1, so some nontrivial coset
    // has zero coboundary
    const auto Y = build_Y(LatinSquare::cyclic(3));
    REQUIRE(cohomology_rank(Y, 1) > 0);
    const auto report = h1_exact(Y);
    CHECK(report.exact);
    CHECK(report.value == Rational(0));
    CHECK(report.witness_coboundary_norm == 0);
    CHECK(report.witness_coset_norm > 0);
}

TEST_CASE("sampled h1 estimate upper-bounds the exact value") {
    const auto S = build_simplex_skeleton(6, 2);
    const auto exact = h1_exact(S);
    Rng rng(72);
    const auto estimate = h1_lower_estimate(S, 400, rng);
    CHECK(!estimate.exact);
    CHECK(estimate.estimate >= exact.value.value() - 1e-12);

    Rng a(5), b(5);
    const auto ra = h1_lower_estimate(S, 50, a);
    const auto rb = h1_lower_estimate(S, 50, b);
    CHECK(ra.estimate == rb.estimate);
}

TEST_CASE("small-cochain bound arithmetic") {
    // c = 1e-3, d = 201, mu~ = d - 3 sqrt(d): comfortably above 1
    const double mu201 = 201.0 - 3.0 * std::sqrt(201.0);
    const auto good = small_cochain_bound(1e-3, mu201, 201);
    CHECK(good.bound > 1.0);
    CHECK(!good.vacuous);

    // c = 1e-3, d = 100, mu~ = 70: bound goes negative (vacuous)
    const auto bad = small_cochain_bound(1e-3, 70.0, 100);
    CHECK(bad.bound == doctest::Approx((1.0 - std::pow(1e-3, 1.0 / 3.0)) * 35.0 - 100.0 / 3.0)
                           .epsilon(1e-12));
    CHECK(bad.bound < 0.0);
    CHECK(bad.vacuous);
}

TEST_CASE("small-cochain inequality on an exhaustive small instance") {
    // T_2 with every phi of support <= c n^2; the inequality must hold
    // for every non-coboundary it applies to
    const auto T = build_T(2);
    std::vector<Cochain> phis;
    for (int e = 0; e < T.edge_count(); ++e) {
        Cochain phi(T, 1);
        phi.bits.set(e, true);
        phis.push_back(std::move(phi));
    }
    const auto checks = verify_prop31(T, 0.9, phis);
    REQUIRE(checks.size() == phis.size());
    for (const auto& check : checks)
        CHECK((check.pass || check.skipped));
}

TEST_CASE("degree-sum inequality rejects bad inputs and holds on good ones") {
    const int n = 6;
    // perfect matching inside the cap: sum of squares = 2m, bound >= mn
    const Graph matching(3 * n, {{0, 9}, {1, 10}, {2, 11}});
    const auto ok = verify_claim32(matching, 0.5, n);
    CHECK(!ok.rejected);
    CHECK(ok.sum_sq == 6);
    CHECK(ok.pass);

    // too many edges for the smallness cap
    std::vector<std::pair<int, int>> dense;
    for (int u = 0; u < 3 * n; ++u)
        for (int v = u + 1; v < 3 * n; ++v) dense.emplace_back(u, v);
    const auto rejected = verify_claim32(Graph(3 * n, dense), 0.01, n);
    CHECK(rejected.rejected);
    CHECK(!rejected.reason.empty());

    // wrong vertex count
    const auto wrong = verify_claim32(Graph::complete(4), 0.5, n);
    CHECK(wrong.rejected);
}

TEST_CASE("random admissible graphs satisfy the degree-sum inequality") {
    const int n = 7;
    Rng rng(73);
    int tested = 0;
    for (int rep = 0; rep < 2000; ++rep) {
        const int m = 1 + static_cast<int>(rng.below(n * n / 2));
        std::vector<std::pair<int, int>> edges;
        std::vector<int> degree(3 * n, 0);
        int guard = 0;
        while (static_cast<int>(edges.size()) < m && ++guard < 100 * m) {
            const int u = static_cast<int>(rng.below(3 * n));
            const int v = static_cast<int>(rng.below(3 * n));
            if (u == v || degree[u] >= n || degree[v] >= n) continue;
            edges.emplace_back(std::min(u, v), std::max(u, v));
            ++degree[u];
            ++degree[v];
        }
        const auto check = verify_claim32(Graph(3 * n, edges), 0.6, n);
        if (check.rejected) continue;
        ++tested;
        CHECK(check.pass);
    }
    CHECK(tested > 1000);
}
