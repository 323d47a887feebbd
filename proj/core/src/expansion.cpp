#include "coblab/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "coblab/spectral.hpp"

namespace coblab {

ExpansionReport h0_graph(const Graph& graph) {
    const int n = graph.vertex_count;
    if (n > 30) throw CapacityError("h0_graph: exact enumeration capped at 30 vertices");
    if (n < 2) throw DimensionError("h0_graph: need at least two vertices");

    std::vector<std::uint32_t> adj(n, 0);
    for (auto [u, v] : graph.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    Rational best(n, 1);  // above any ratio: cut <= |E|, |S| >= 1
    bool found = false;
    std::uint32_t best_set = 0;
    const std::uint32_t total = 1u << n;
    for (std::uint32_t s = 1; s < total; ++s) {
        const int size = std::popcount(s);
        if (2 * size > n) continue;
        int cut = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) cut += std::popcount(adj[v] & ~s);
        const Rational ratio(cut, size);
        if (!found || ratio < best) {
            best = ratio;
            best_set = s;
            found = true;
        }
    }

    ExpansionReport report;
    report.value = best;
    report.exact = true;
    report.witness = BitVec(n);
    for (int v = 0; v < n; ++v)
        if ((best_set >> v) & 1) report.witness.set(v, true);
    report.witness_coset_norm = std::popcount(best_set);
    std::vector<bool> mask(n, false);
    for (int v = 0; v < n; ++v) mask[v] = report.witness.get(v);
    report.witness_coboundary_norm = graph.cut_size(mask);
    return report;
}

namespace {

struct H1Candidate {
    bool found = false;
    Rational ratio;
    std::uint64_t index = 0;  // enumeration index; ties resolve to the smallest
    std::uint32_t rep_edges = 0;
    std::uint32_t min_edges = 0;  // in-coset minimal representative
    std::size_t d_norm = 0;
    std::size_t c_norm = 0;
};

void consider(H1Candidate& best, const H1Candidate& cand) {
    if (!cand.found) return;
    if (!best.found || cand.ratio < best.ratio ||
        (cand.ratio == best.ratio && cand.index < best.index)) {
        best = cand;
    }
}

}  // namespace

ExpansionReport h1_exact(const Complex2& complex, int threads) {
    const int E = complex.edge_count();
    const int V = complex.vertex_count;
    const int T = complex.triangle_count();
    if (E > kH1ExactCap)
        throw CapacityError("h1_exact: dim C^1 above exact sweep cap");
    if (V > 24 || T > 64)
        throw CapacityError("h1_exact: instance outside sweep word budget");

    // star[v]: edge mask of edges at v; these span B^1
    std::vector<std::uint32_t> star(V, 0);
    for (int e = 0; e < E; ++e) {
        star[complex.edges[e].first] |= 1u << e;
        star[complex.edges[e].second] |= 1u << e;
    }
    // dtri[e]: triangle mask of triangles through e
    std::vector<std::uint64_t> dtri(E, 0);
    for (int t = 0; t < T; ++t)
        for (int e : complex.triangle_edges[t]) dtri[e] |= 1ULL << t;

    // RREF of the star rows; pivot columns carry B^1, the complementary
    // information set enumerates one representative per coset.
    std::vector<std::uint32_t> basis;
    {
        std::vector<std::uint32_t> rows(star);
        for (int col = 0; col < E; ++col) {
            int pivot = -1;
            for (std::size_t r = basis.size(); r < rows.size(); ++r)
                if ((rows[r] >> col) & 1) { pivot = static_cast<int>(r); break; }
            if (pivot < 0) continue;
            std::swap(rows[basis.size()], rows[pivot]);
            for (std::size_t r = 0; r < rows.size(); ++r)
                if (r != basis.size() && ((rows[r] >> col) & 1))
                    rows[r] ^= rows[basis.size()];
            basis.push_back(rows[basis.size()]);
        }
    }
    // pivot columns: lowest set bit of each RREF row
    std::uint32_t pivot_mask = 0;
    for (std::uint32_t b : basis) pivot_mask |= b & (~b + 1);
    std::vector<int> free_cols;
    for (int e = 0; e < E; ++e)
        if (!((pivot_mask >> e) & 1)) free_cols.push_back(e);
    const int q = static_cast<int>(free_cols.size());
    if (q == 0) throw InvariantError("h1_exact: every 1-cochain is a coboundary");

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, threads);
    const std::uint64_t total = 1ULL << q;
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / threads);

    auto gray = [](std::uint64_t x) { return x ^ (x >> 1); };

    auto sweep_range = [&](std::uint64_t lo, std::uint64_t hi, H1Candidate& best) {
        std::uint32_t phi = 0;
        std::uint64_t dphi = 0;
        {
            const std::uint64_t g = gray(lo);
            for (int j = 0; j < q; ++j)
                if ((g >> j) & 1) {
                    phi ^= 1u << free_cols[j];
                    dphi ^= dtri[free_cols[j]];
                }
        }
        for (std::uint64_t x = lo; x < hi; ++x) {
            if (x != 0) {
                // in-coset support minimum over all 2^V coboundary shifts
                std::uint32_t cur = phi;
                int pop = std::popcount(cur);
                int m = pop;
                std::uint32_t best_psi = 0;
                const std::uint32_t inner_total = 1u << V;
                for (std::uint32_t t = 1; t < inner_total; ++t) {
                    cur ^= star[std::countr_zero(t)];
                    const int p = std::popcount(cur);
                    if (p < m) { m = p; best_psi = t ^ (t >> 1); }
                }
                H1Candidate cand;
                cand.found = true;
                cand.ratio = Rational(std::popcount(dphi), m);
                cand.index = x;
                cand.rep_edges = phi;
                cand.min_edges = phi;
                for (int v = 0; v < V; ++v)
                    if ((best_psi >> v) & 1) cand.min_edges ^= star[v];
                cand.d_norm = static_cast<std::size_t>(std::popcount(dphi));
                cand.c_norm = static_cast<std::size_t>(m);
                consider(best, cand);
            }
            if (x + 1 < hi) {
                const int j = std::countr_zero(x + 1);
                phi ^= 1u << free_cols[j];
                dphi ^= dtri[free_cols[j]];
            }
        }
    };

    std::vector<H1Candidate> partial(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = (t + 1 == threads) ? total : std::min(total, (t + 1) * chunk);
        if (lo >= hi) continue;
        pool.emplace_back(sweep_range, lo, hi, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();

    H1Candidate best;
    for (const auto& cand : partial) consider(best, cand);
    if (!best.found) throw InvariantError("h1_exact: empty sweep");

    ExpansionReport report;
    report.value = best.ratio;
    report.exact = true;
    report.witness = BitVec(E);
    for (int e = 0; e < E; ++e)
        if ((best.min_edges >> e) & 1) report.witness.set(e, true);
    report.witness_coboundary_norm = best.d_norm;
    report.witness_coset_norm = best.c_norm;
    return report;
}

ExpansionReport h1_lower_estimate(const Complex2& complex, int samples, Rng& rng) {
    ExpansionReport report;
    report.exact = false;
    report.note = "min observed ratio over sampled cochains; an upper bound on h1";
    if (samples <= 0) {
        report.note = "empty report: no samples requested";
        return report;
    }
    const int E = complex.edge_count();
    bool found = false;
    double best = 0.0;
    BitVec best_witness(E);
    std::size_t best_d = 0, best_m = 0;
    for (int s = 0; s < samples; ++s) {
        Cochain phi(complex, 1);
        for (int e = 0; e < E; ++e) phi.bits.set(e, rng.coin());
        const auto norm =
            coset_norm(phi, /*allow_heuristic=*/true, 64, rng.next());
        if (norm.norm == 0) continue;  // coboundary (or indistinguishable from one)
        const std::size_t wd = support_norm(coboundary(phi));
        const double ratio = static_cast<double>(wd) / static_cast<double>(norm.norm);
        if (!found || ratio < best) {
            found = true;
            best = ratio;
            best_witness = norm.minimizer.bits;
            best_d = wd;
            best_m = norm.norm;
        }
    }
    report.estimate = best;
    report.witness = best_witness;
    report.witness_coboundary_norm = best_d;
    report.witness_coset_norm = best_m;
    if (!found) report.note = "no sample fell outside B^1";
    return report;
}

SmallCochainBound small_cochain_bound(double c, double mu_tilde, int d) {
    if (!(c > 0.0 && c < 1.0))
        throw DimensionError("small_cochain_bound: c must lie in (0,1)");
    SmallCochainBound bound;
    bound.c = c;
    bound.mu_tilde = mu_tilde;
    bound.d = d;
    bound.bound = (1.0 - std::cbrt(c)) * mu_tilde / 2.0 - static_cast<double>(d) / 3.0;
    bound.vacuous = bound.bound <= 0.0;
    return bound;
}

std::vector<Prop31Check> verify_prop31(const Complex2& complex, double c,
                                       const std::vector<Cochain>& phis) {
    if (!complex.tripartite)
        throw DimensionError("verify_prop31: complex must be tripartite");
    const int n = complex.tripartite->n;
    const int d = edge_degree_profile(complex).max;
    const double mu = min_link_gap(complex).min_gap;
    const auto bound = small_cochain_bound(c, mu, d);

    std::vector<Prop31Check> checks;
    checks.reserve(phis.size());
    for (const auto& phi : phis) {
        Prop31Check check;
        check.bound = bound.bound;
        const auto norm = coset_norm(phi);
        check.coset_norm = norm.norm;
        if (norm.norm == 0 ||
            static_cast<double>(norm.norm) > c * static_cast<double>(n) * n) {
            check.skipped = true;
            check.pass = true;
            checks.push_back(check);
            continue;
        }
        check.coboundary_norm = support_norm(coboundary(phi));
        check.vacuous = bound.vacuous;
        check.pass = static_cast<double>(check.coboundary_norm) >=
                     bound.bound * static_cast<double>(check.coset_norm) - 1e-9;
        checks.push_back(check);
    }
    return checks;
}

Claim32Check verify_claim32(const Graph& graph, double c, int n) {
    Claim32Check check;
    if (graph.vertex_count != 3 * n) {
        check.rejected = true;
        check.reason = "graph must have 3n vertices";
        return check;
    }
    const long m = graph.edge_count();
    if (static_cast<double>(m) > c * static_cast<double>(n) * n) {
        check.rejected = true;
        check.reason = "|E| exceeds c n^2";
        return check;
    }
    for (int v = 0; v < graph.vertex_count; ++v)
        if (graph.degree(v) > n) {
            check.rejected = true;
            check.reason = "a degree exceeds n (not a minimal representative)";
            return check;
        }
    for (int v = 0; v < graph.vertex_count; ++v) {
        const long s = graph.degree(v);
        check.sum_sq += s * s;
    }
    check.bound = (1.0 + 3.0 * std::cbrt(c)) * static_cast<double>(m) * n;
    check.pass = static_cast<double>(check.sum_sq) <= check.bound + 1e-9;
    return check;
}

}  // namespace coblab
