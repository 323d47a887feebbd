#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "coblab/deviations.hpp"

using namespace coblab;

namespace {

// Oracle permanent by direct permutation expansion, n <= 8.
long oracle_permanent(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long total = 0;
    do {
        long prod = 1;
        for (int i = 0; i < n && prod; ++i) prod *= m[i][perm[i]];
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<std::vector<int>> ones(int n) {
    return std::vector<std::vector<int>>(n, std::vector<int>(n, 1));
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("permanent of canonical matrices") {
    for (int n = 1; n <= 8; ++n)
        CHECK(permanent_exact(ones(n)) == static_cast<uint128>(factorial(n)));

    std::vector<std::vector<int>> id(5, std::vector<int>(5, 0));
    for (int i = 0; i < 5; ++i) id[i][i] = 1;
    CHECK(permanent_exact(id) == 1);

    std::vector<std::vector<int>> zero(4, std::vector<int>(4, 0));
    CHECK(permanent_exact(zero) == 0);

    // ones minus identity: derangement numbers 0, 1, 2, 9, 44, 265
    const long derangements[] = {1, 0, 1, 2, 9, 44, 265};
    for (int n = 1; n <= 6; ++n) {
        auto m = ones(n);
        for (int i = 0; i < n; ++i) m[i][i] = 0;
        CHECK(permanent_exact(m) == static_cast<uint128>(derangements[n]));
    }
}

TEST_CASE("permanent matches the oracle on random matrices") {
    Rng rng(81);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(6));
        std::vector<std::vector<int>> m(n, std::vector<int>(n));
        for (auto& row : m)
            for (auto& x : row) x = rng.coin() ? 1 : 0;
        CHECK(permanent_exact(m) == static_cast<uint128>(oracle_permanent(m)));
    }
    CHECK_THROWS_AS(permanent_exact(ones(21)), CapacityError);
}

TEST_CASE("uint128 printing") {
    CHECK(uint128_str(0) == "0");
    CHECK(uint128_str(1234567890123456789ULL) == "1234567890123456789");
    // 2^100
    uint128 big = 1;
    for (int i = 0; i < 100; ++i) big *= 2;
    CHECK(uint128_str(big) == "1267650600228229401496703205376");
}

TEST_CASE("bregman bound dominates the permanent") {
    // all-ones: the bound is exactly prod n!^{1/n} ... = n!
    for (int n = 2; n <= 7; ++n)
        CHECK(bregman_bound(ones(n)) == doctest::Approx(static_cast<double>(factorial(n)))
                                            .epsilon(1e-9));

    Rng rng(82);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + static_cast<int>(rng.below(6));
        std::vector<std::vector<int>> m(n, std::vector<int>(n));
        for (auto& row : m)
            for (auto& x : row) x = rng.uniform01() < 0.6 ? 1 : 0;
        const double bound = bregman_bound(m);
        const double exact = static_cast<double>(oracle_permanent(m));
        CHECK(bound >= exact - 1e-9 * std::max(1.0, exact));
    }
}

TEST_CASE("restricted-permutation count identity") {
    // brute count of permutations with g_E = m and no forbidden values,
    // against the sum-of-permanents route, all m
    Rng rng(83);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 4 + static_cast<int>(rng.below(3));  // 4..6
        const int k = static_cast<int>(rng.below(2));      // 0 or 1
        PairSet E(n);
        while (E.size() < n * n / 3)
            E.insert(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)));
        std::vector<std::vector<int>> forbidden(n);
        for (auto& B : forbidden)
            while (static_cast<int>(B.size()) < k) {
                const int j = static_cast<int>(rng.below(n));
                if (std::find(B.begin(), B.end(), j) == B.end()) B.push_back(j);
            }
        const RestrictionSystem sys(E, forbidden);
        long total = 0;
        for (int m = 0; m <= n; ++m) {
            const auto result = count_SEFm(sys, m);
            CHECK(result.identity_holds);
            CHECK(result.permanent_sum == static_cast<uint128>(result.brute_count));
            total += result.brute_count;
        }
        // the slices partition the admissible permutations
        long admissible = 0;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                ok = std::find(forbidden[i].begin(), forbidden[i].end(), perm[i]) ==
                     forbidden[i].end();
            if (ok) ++admissible;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(total == admissible);
    }
}

TEST_CASE("empty E degenerates to unrestricted counting") {
    const int n = 5;
    const RestrictionSystem sys{PairSet(n), std::vector<std::vector<int>>(n)};
    const auto m0 = count_SEFm(sys, 0);
    CHECK(m0.identity_holds);
    CHECK(m0.brute_count == factorial(n));
    for (int m = 1; m <= n; ++m) CHECK(count_SEFm(sys, m).brute_count == 0);
}

TEST_CASE("restricted count bound holds on admissible systems") {
    Rng rng(84);
    for (int rep = 0; rep < 5; ++rep) {
        const int n = 7;
        const double gamma = 0.5;
        PairSet E(n);
        // per-row sets of size n/2 keep ell(E) <= n/2 while |E| >= gamma n^2
        for (int i = 0; i < n; ++i)
            while (static_cast<int>(E.row_sets[i].size()) < n / 2)
                E.insert(i, static_cast<int>(rng.below(n)));
        // |E| = 7 * 3 = 21, so gamma = 0.42 keeps gamma n^2 = 20.58 <= |E|
        const RestrictionSystem sys(E, std::vector<std::vector<int>>(n));
        const auto check = check_prop42(sys, 0.42);
        CHECK(!check.rejected);
        CHECK(check.pass);
    }
}

TEST_CASE("restricted count bound rejects violated preconditions") {
    const int n = 6;
    PairSet tiny(n);
    tiny.insert(0, 0);
    const auto small_e = check_prop42(RestrictionSystem(tiny, std::vector<std::vector<int>>(n)),
                                      0.5);
    CHECK(small_e.rejected);

    PairSet full(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) full.insert(i, j);
    const auto big_ell = check_prop42(RestrictionSystem(full, std::vector<std::vector<int>>(n)),
                                      0.5);
    CHECK(big_ell.rejected);  // ell(E) = n > n/2
}

TEST_CASE("latin family count bound on full enumerations") {
    Rng rng(85);
    for (int n : {4, 5}) {
        // rows of size floor(n/2) give |E_i| = n floor(n/2); gamma must
        // stay below floor(n/2)/n for the E_i size precondition
        const double gamma = n == 4 ? 0.5 : 0.4;
        std::vector<PairSet> Es;
        for (int i = 0; i < n; ++i) {
            PairSet E(n);
            for (int r = 0; r < n; ++r)
                while (static_cast<int>(E.row_sets[r].size()) < n / 2)
                    E.insert(r, static_cast<int>(rng.below(n)));
            Es.push_back(std::move(E));
        }
        std::vector<int> I;
        for (int i = 0; i < static_cast<int>(std::ceil(gamma * n / 2.0)); ++i) I.push_back(i);
        const auto check = check_prop43(n, gamma, Es, I);
        CHECK(!check.rejected);
        CHECK(check.lhs <= check.rhs);
        CHECK(check.pass);
    }
}

TEST_CASE("factorial product to latin count ratio") {
    const auto one = nls_ratio(1);
    CHECK(one.latin_count == 1);
    CHECK(one.ratio == doctest::Approx(1.0));
    CHECK(one.at_least_one);

    const auto three = nls_ratio(3);
    CHECK(three.latin_count == 12);
    // prod k!^{3/k} = 1 * 2^{3/2} * 6 = 12 sqrt(2); ratio = sqrt(2)
    CHECK(three.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(three.at_least_one);

    for (int n = 1; n <= 5; ++n) CHECK(nls_ratio(n).at_least_one);
}

TEST_CASE("tail experiment bookkeeping on a degenerate CE") {
    // CE = everything: f is identically n^2, far above any threshold
    const int n = 6;
    TriSet all(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) all.insert(i, j, k);
    const auto report = tail_experiment(n, 0.5, all, 50, 17);
    CHECK(report.samples == 50);
    CHECK(report.below_threshold == 0);
    CHECK(report.tail_mass == doctest::Approx(0.0));
    CHECK(report.empirical_mean == doctest::Approx(static_cast<double>(n * n)));
    CHECK(report.expected_mean == doctest::Approx(static_cast<double>(n * n * n) / n));
    CHECK(report.threshold == doctest::Approx(1e-3 * 0.25 * 36.0));
    for (int f : report.f_values) CHECK(f == n * n);
}

TEST_CASE("tail experiment is deterministic in the seed") {
    const int n = 8;
    Rng rng(86);
    TriSet CE(n);
    while (CE.size() < 250)
        CE.insert(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)),
                  static_cast<int>(rng.below(n)));
    const auto a = tail_experiment(n, 0.4, CE, 40, 123);
    const auto b = tail_experiment(n, 0.4, CE, 40, 123);
    CHECK(a.f_values == b.f_values);
    // empirical mean should land near |CE| / n for a uniform-ish sampler
    CHECK(a.empirical_mean > 0.0);
}

TEST_CASE("homology frequency experiment") {
    // d = 1: Y(L) always has nonvanishing reduced H^1 (n^2 triangles
    // cannot kill the tripartite cycle space for n >= 2)
    const auto d1 = h1_nonvanishing_experiment(4, 1, 10, 5);
    CHECK(d1.samples == 10);
    CHECK(d1.nonvanishing == 10);
    CHECK(d1.frequency == doctest::Approx(1.0));
    for (int r : d1.ranks) CHECK(r == 3 * 16 - 16 - (3 * 4 - 1));  // E - T - (V-1)

    // determinism
    const auto a = h1_nonvanishing_experiment(5, 3, 8, 99);
    const auto b = h1_nonvanishing_experiment(5, 3, 8, 99);
    CHECK(a.ranks == b.ranks);
    // reference constant only applies at d = 3
    CHECK(a.asymptotic_reference == doctest::Approx(1.0 - 17.0 * std::exp(-3.0) / 2.0));
    CHECK(d1.asymptotic_reference == doctest::Approx(0.0));
    // Wilson interval brackets the frequency
    CHECK(a.interval.low <= a.frequency + 1e-12);
    CHECK(a.interval.high >= a.frequency - 1e-12);
}

TEST_CASE("wilson and chi-square utilities") {
    const auto w = wilson95(50, 100);
    CHECK(w.low > 0.40);
    CHECK(w.high < 0.60);
    CHECK(w.low < 0.5);
    CHECK(w.high > 0.5);
    const auto all = wilson95(100, 100);
    CHECK(all.high == doctest::Approx(1.0));
    CHECK(all.low > 0.95);

    // uniform counts: p-value near 1; wildly skewed: near 0
    const auto flat = chi_square_uniform({100, 100, 100, 100});
    CHECK(flat.p_value > 0.99);
    const auto skew = chi_square_uniform({400, 0, 0, 0});
    CHECK(skew.p_value < 1e-6);
}
