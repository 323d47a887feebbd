#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coblab/latin.hpp"
#include "coblab/rng.hpp"
#include "coblab/stats.hpp"

namespace coblab {

using uint128 = unsigned __int128;

std::string uint128_str(uint128 v);

// Exact permanent of a 0/1 matrix, n <= 20, by Ryser's inclusion-
// exclusion with Gray-code column updates.
uint128 permanent_exact(const std::vector<std::vector<int>>& matrix);

// Product of t_i!^{1/t_i} over rows, log-domain; empty rows contribute 1.
double bregman_bound(const std::vector<std::vector<int>>& matrix);

// Restricted-permutation system: E = union {i} x A_i, forbidden sets B_i
// of common size k. R_i = A_i - B_i, S_i = [n] - A_i - B_i.
struct RestrictionSystem {
    int n = 0;
    int k = 0;
    PairSet E;
    std::vector<std::vector<int>> forbidden;  // B_i
    std::vector<std::vector<int>> R;
    std::vector<std::vector<int>> S;

    RestrictionSystem(PairSet E_, std::vector<std::vector<int>> forbidden_);

    int ell() const { return E.max_row_size(); }
};

struct SEFmResult {
    long brute_count = 0;      // |{pi : g_E(pi) = m, pi(i) not in B_i}|
    uint128 permanent_sum = 0; // sum over |I| = m of per M_I
    bool identity_holds = false;
};

// Both sides of the permanent identity for S(E,F,m), computed
// independently; n <= 8.
SEFmResult count_SEFm(const RestrictionSystem& sys, int m);

struct InequalityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool rejected = false;  // preconditions not met
    bool pass = false;
    std::string reason;
};

// |S(E,F)| = sum_{m < gamma n / 10} |S(E,F,m)|  <=  4 n^2 ((n-k)/e)^n e^{-gamma n / 20}
// Preconditions: |E| >= gamma n^2, k <= gamma n / 2, ell(E) <= n/2, n <= 8.
InequalityCheck check_prop42(const RestrictionSystem& sys, double gamma);

// |G(I)| <= (2n)^{gamma n} (prod k!^{n/k}) e^{-gamma^2 n^2 / 40}, counting
// over the full enumeration of Latin squares; n <= 5. I must be nonempty
// with |I| = ceil(gamma n / 2).
InequalityCheck check_prop43(int n, double gamma, const std::vector<PairSet>& Es,
                             const std::vector<int>& I);

struct NlsRatio {
    long latin_count = 0;     // |L_n| by enumeration
    double log_product = 0.0; // log of prod k!^{n/k}
    double ratio = 0.0;
    bool at_least_one = false;
};

// prod_{k=1}^n k!^{n/k} / |L_n| for n <= 5.
NlsRatio nls_ratio(int n);

struct TailReport {
    int n = 0;
    double c = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
    double threshold = 0.0;        // 10^-3 c^2 n^2
    double reference_bound = 0.0;      // e^{-10^-3 c^2 n^2}
    long below_threshold = 0;
    double tail_mass = 0.0;
    double empirical_mean = 0.0;
    double expected_mean = 0.0;    // |CE| / n
    std::vector<int> f_values;     // one per sample
};

// Observational tail experiment for f_CE over sampled Latin squares.
TailReport tail_experiment(int n, double c, const TriSet& CE, long samples,
                           std::uint64_t seed, const SamplerParams& params = {});

struct HomologyFrequencyReport {
    int n = 0;
    int d = 0;
    long samples = 0;
    std::uint64_t seed = 0;
    long nonvanishing = 0;  // samples with reduced H^1 rank > 0
    double frequency = 0.0;
    WilsonInterval interval;
    double asymptotic_reference = 0.0;  // asymptotic lower bound for d = 3
    std::vector<int> ranks;        // one per sample
};

// Frequency of nonvanishing F2 1-cohomology for Y built from d fresh
// uniform Latin squares.
HomologyFrequencyReport h1_nonvanishing_experiment(int n, int d, long samples,
                                                   std::uint64_t seed,
                                                   const SamplerParams& params = {});

}  // namespace coblab
