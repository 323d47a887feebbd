#include "coblab/deviations.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <thread>

#include "coblab/complex2.hpp"
#include "coblab/gf2.hpp"

namespace coblab {

std::string uint128_str(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back('0' + static_cast<char>(v % 10));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

uint128 permanent_exact(const std::vector<std::vector<int>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n == 0) return 1;
    if (n > 20) throw CapacityError("permanent_exact: capped at n <= 20");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n)
            throw DimensionError("permanent_exact: matrix not square");

    // Ryser: per A = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} a_ij
    std::vector<std::int64_t> row_sums(n, 0);
    __int128 total = 0;
    const std::uint32_t subsets = 1u << n;
    std::uint32_t prev = 0;
    for (std::uint32_t g = 1; g < subsets; ++g) {
        const std::uint32_t cur = g ^ (g >> 1);
        const std::uint32_t diff = cur ^ prev;
        const int j = std::countr_zero(diff);
        const int sign_col = (cur >> j) & 1 ? 1 : -1;
        for (int i = 0; i < n; ++i) row_sums[i] += sign_col * matrix[i][j];
        prev = cur;
        __int128 prod = 1;
        for (int i = 0; i < n; ++i) {
            prod *= row_sums[i];
            if (prod == 0) break;
        }
        if (std::popcount(cur) % 2 != 0) prod = -prod;
        total += prod;
    }
    if (n % 2 != 0) total = -total;
    return static_cast<uint128>(total);
}

double bregman_bound(const std::vector<std::vector<int>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    double log_bound = 0.0;
    for (const auto& row : matrix) {
        const int t = static_cast<int>(std::count(row.begin(), row.end(), 1));
        if (t > 0) log_bound += std::lgamma(t + 1.0) / t;
    }
    return std::exp(log_bound);
}

RestrictionSystem::RestrictionSystem(PairSet E_, std::vector<std::vector<int>> forbidden_)
    : n(E_.n), E(std::move(E_)), forbidden(std::move(forbidden_)) {
    if (static_cast<int>(forbidden.size()) != n)
        throw DimensionError("RestrictionSystem: need n forbidden sets");
    k = forbidden.empty() ? 0 : static_cast<int>(forbidden[0].size());
    for (auto& B : forbidden) {
        std::sort(B.begin(), B.end());
        if (static_cast<int>(B.size()) != k)
            throw DimensionError("RestrictionSystem: |B_i| must be a common k");
    }
    R.resize(n);
    S.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& B = forbidden[i];
        auto in_b = [&](int j) { return std::binary_search(B.begin(), B.end(), j); };
        for (int j = 0; j < n; ++j) {
            if (in_b(j)) continue;
            if (E.contains(i, j)) R[i].push_back(j);
            else S[i].push_back(j);
        }
    }
}

namespace {

long brute_sefm(const RestrictionSystem& sys, int m_exact, double m_below,
                bool use_below) {
    const int n = sys.n;
    if (n > 8) throw CapacityError("S(E,F) brute force capped at n <= 8");
    std::vector<std::uint32_t> forbid(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : sys.forbidden[i]) forbid[i] |= 1u << j;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        int g = 0;
        for (int i = 0; i < n; ++i) {
            if ((forbid[i] >> perm[i]) & 1) { ok = false; break; }
            if (sys.E.contains(i, perm[i])) ++g;
        }
        if (!ok) continue;
        if (use_below ? (static_cast<double>(g) < m_below) : (g == m_exact)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

SEFmResult count_SEFm(const RestrictionSystem& sys, int m) {
    const int n = sys.n;
    if (n > 8) throw CapacityError("count_SEFm: capped at n <= 8");
    SEFmResult result;
    result.brute_count = brute_sefm(sys, m, 0.0, false);

    // independent route: sum over |I| = m of per M_I
    const std::uint32_t subsets = 1u << n;
    for (std::uint32_t I = 0; I < subsets; ++I) {
        if (std::popcount(I) != m) continue;
        std::vector<std::vector<int>> M(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            const auto& cols = ((I >> i) & 1) ? sys.R[i] : sys.S[i];
            for (int j : cols) M[i][j] = 1;
        }
        result.permanent_sum += permanent_exact(M);
    }
    result.identity_holds =
        result.permanent_sum == static_cast<uint128>(result.brute_count);
    return result;
}

InequalityCheck check_prop42(const RestrictionSystem& sys, double gamma) {
    const int n = sys.n;
    InequalityCheck check;
    if (n > 8) throw CapacityError("check_prop42: capped at n <= 8");
    if (sys.E.size() < gamma * n * n) {
        check.rejected = true;
        check.reason = "|E| < gamma n^2";
        return check;
    }
    if (sys.k > gamma * n / 2.0) {
        check.rejected = true;
        check.reason = "k > gamma n / 2";
        return check;
    }
    if (sys.ell() > n / 2.0) {
        check.rejected = true;
        check.reason = "ell(E) > n/2";
        return check;
    }
    check.lhs = static_cast<double>(brute_sefm(sys, 0, gamma * n / 10.0, true));
    check.rhs = 4.0 * n * n * std::pow((n - sys.k) / std::exp(1.0), n) *
                std::exp(-gamma * n / 20.0);
    check.pass = check.lhs <= check.rhs;
    return check;
}

InequalityCheck check_prop43(int n, double gamma, const std::vector<PairSet>& Es,
                             const std::vector<int>& I) {
    InequalityCheck check;
    if (n > 5) throw CapacityError("check_prop43: capped at n <= 5");
    if (static_cast<int>(Es.size()) != n)
        throw DimensionError("check_prop43: need n pair sets");
    if (I.empty()) {
        check.rejected = true;
        check.reason = "I must be nonempty";
        return check;
    }
    const int want = static_cast<int>(std::ceil(gamma * n / 2.0));
    if (static_cast<int>(I.size()) != want) {
        check.rejected = true;
        check.reason = "|I| must equal ceil(gamma n / 2)";
        return check;
    }
    for (int i : I) {
        if (i < 0 || i >= n) throw DimensionError("check_prop43: index out of range");
        if (Es[i].size() < gamma * n * n) {
            check.rejected = true;
            check.reason = "|E_i| < gamma n^2 for some i in I";
            return check;
        }
        if (Es[i].max_row_size() > n / 2.0) {
            check.rejected = true;
            check.reason = "ell(E_i) > n/2 for some i in I";
            return check;
        }
    }

    long count = 0;
    for (const auto& square : enumerate_latin(n)) {
        bool all = true;
        for (int i : I) {
            if (!(static_cast<double>(g_stat(square.rows[i], Es[i])) < gamma * n / 10.0)) {
                all = false;
                break;
            }
        }
        if (all) ++count;
    }

    double log_rhs = gamma * n * std::log(2.0 * n) - gamma * gamma * n * n / 40.0;
    for (int k = 1; k <= n; ++k)
        log_rhs += (static_cast<double>(n) / k) * std::lgamma(k + 1.0);
    check.lhs = static_cast<double>(count);
    check.rhs = std::exp(log_rhs);
    check.pass = count == 0 || std::log(static_cast<double>(count)) <= log_rhs;
    return check;
}

NlsRatio nls_ratio(int n) {
    if (n > 5) throw CapacityError("nls_ratio: capped at n <= 5");
    NlsRatio result;
    result.latin_count = static_cast<long>(enumerate_latin(n).size());
    for (int k = 1; k <= n; ++k)
        result.log_product += (static_cast<double>(n) / k) * std::lgamma(k + 1.0);
    result.ratio = std::exp(result.log_product - std::log(static_cast<double>(result.latin_count)));
    result.at_least_one = result.log_product >= std::log(static_cast<double>(result.latin_count)) - 1e-12;
    return result;
}

namespace {

// Deterministic parallel map over sample indices: sample i depends only
// on root.split(i), never on scheduling.
template <typename F>
void parallel_samples(long samples, F&& body) {
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = static_cast<int>(std::max<long>(1, std::min<long>(threads, samples)));
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= samples) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

TailReport tail_experiment(int n, double c, const TriSet& CE, long samples,
                           std::uint64_t seed, const SamplerParams& params) {
    if (CE.n != n) throw DimensionError("tail_experiment: TriSet order mismatch");
    if (static_cast<double>(CE.size()) < c * std::pow(n, 3))
        throw DimensionError("tail_experiment: need |CE| >= c n^3");
    if (samples <= 0) throw DimensionError("tail_experiment: samples must be positive");

    TailReport report;
    report.n = n;
    report.c = c;
    report.samples = samples;
    report.seed = seed;
    report.threshold = 1e-3 * c * c * n * n;
    report.reference_bound = std::exp(-1e-3 * c * c * n * n);
    report.expected_mean = static_cast<double>(CE.size()) / n;
    report.f_values.assign(samples, 0);

    const Rng root(seed);
    parallel_samples(samples, [&](long i) {
        Rng rng = root.split(static_cast<std::uint64_t>(i));
        const LatinSquare square = sample_uniform(n, rng, params);
        report.f_values[i] = f_stat(square, CE);
    });

    double sum = 0.0;
    for (int f : report.f_values) {
        sum += f;
        if (static_cast<double>(f) < report.threshold) ++report.below_threshold;
    }
    report.empirical_mean = sum / static_cast<double>(samples);
    report.tail_mass = static_cast<double>(report.below_threshold) / static_cast<double>(samples);
    return report;
}

HomologyFrequencyReport h1_nonvanishing_experiment(int n, int d, long samples,
                                                   std::uint64_t seed,
                                                   const SamplerParams& params) {
    if (n < 2 || d < 1) throw DimensionError("h1_nonvanishing_experiment: bad n or d");
    if (samples <= 0) throw DimensionError("h1_nonvanishing_experiment: samples must be positive");

    HomologyFrequencyReport report;
    report.n = n;
    report.d = d;
    report.samples = samples;
    report.seed = seed;
    report.asymptotic_reference = d == 3 ? 1.0 - 17.0 * std::exp(-3.0) / 2.0 : 0.0;
    report.ranks.assign(samples, 0);

    const Rng root(seed);
    parallel_samples(samples, [&](long i) {
        Rng rng = root.split(static_cast<std::uint64_t>(i));
        std::vector<LatinSquare> squares;
        squares.reserve(d);
        for (int j = 0; j < d; ++j) squares.push_back(sample_uniform(n, rng, params));
        report.ranks[i] = cohomology_rank(build_Y_union(squares), 1);
    });

    for (int r : report.ranks)
        if (r > 0) ++report.nonvanishing;
    report.frequency = static_cast<double>(report.nonvanishing) / static_cast<double>(samples);
    report.interval = wilson95(report.nonvanishing, samples);
    return report;
}

}  // namespace coblab
