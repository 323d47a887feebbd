#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coblab/complex2.hpp"
#include "coblab/gf2.hpp"
#include "coblab/rational.hpp"
#include "coblab/rng.hpp"

namespace coblab {

// Exact h1 sweep cap: dim C^1 <= 28 (full coset enumeration).
inline constexpr int kH1ExactCap = 28;

struct ExpansionReport {
    Rational value;              // exact mode
    double estimate = 0.0;       // heuristic mode (upper bound on h1)
    bool exact = true;
    BitVec witness;              // minimizing cochain (coset-minimal representative)
    std::size_t witness_coboundary_norm = 0;
    std::size_t witness_coset_norm = 0;
    std::string note;
};

// Cheeger constant h0 by exact subset enumeration, |V| <= 30.
ExpansionReport h0_graph(const Graph& graph);

// h1(X) = min over phi outside B^1 of ||d1 phi|| / ||[phi]||, exact.
// Enumerates one representative per coset of C^1/B^1 (Gray order over an
// information set of edge coordinates) and minimizes support in-coset.
ExpansionReport h1_exact(const Complex2& complex, int threads = 0);

// Sampled upper bound on h1 for instances beyond the exact cap: the
// minimum observed ratio over random cochains with heuristic coset norms.
ExpansionReport h1_lower_estimate(const Complex2& complex, int samples, Rng& rng);

struct SmallCochainBound {
    double c = 0.0;
    double mu_tilde = 0.0;
    int d = 0;
    double bound = 0.0;  // (1 - c^{1/3}) mu~ / 2 - d/3
    bool vacuous = false;
};

SmallCochainBound small_cochain_bound(double c, double mu_tilde, int d);

struct Prop31Check {
    std::size_t coset_norm = 0;
    std::size_t coboundary_norm = 0;
    double bound = 0.0;
    bool skipped = false;  // phi in B^1
    bool vacuous = false;  // bound <= 0
    bool pass = false;
};

// ||d1 phi|| >= ((1-c^{1/3}) mu~/2 - d/3) ||[phi]|| for each sampled phi
// with ||[phi]|| <= c n^2. mu~ and d are computed from the complex.
std::vector<Prop31Check> verify_prop31(const Complex2& complex, double c,
                                       const std::vector<Cochain>& phis);

struct Claim32Check {
    long sum_sq = 0;        // sum of squared degrees
    double bound = 0.0;     // (1 + 3 c^{1/3}) m n
    bool rejected = false;  // preconditions not met
    bool pass = false;
    std::string reason;
};

// For G = supp(phi) on 3n vertices with m = |E| <= c n^2 and all degrees
// <= n: sum s_v^2 <= (1 + 3 c^{1/3}) m n.
Claim32Check verify_claim32(const Graph& graph, double c, int n);

}  // namespace coblab
