// coblab command-line harness: every experiment gets a subcommand, a
// recorded seed and machine-readable output (JSON, optionally CSV).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "coblab/deviations.hpp"
#include "coblab/expansion.hpp"
#include "coblab/gf2.hpp"
#include "coblab/serialize.hpp"
#include "coblab/spectral.hpp"

namespace {

using namespace coblab;

constexpr const char* kVersion = "coblab 0.1.0";

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInvariant = 4;

struct Output {
    std::string path;       // empty: stdout
    std::string format = "json";

    // Whole-artifact write; nothing touches disk until the run succeeded.
    void write(const json& manifest, const json& result, const std::string& csv = "") const {
        json doc{{"manifest", manifest}, {"result", result}};
        if (path.empty()) {
            std::cout << doc.dump(2) << "\n";
            if (format == "csv" && !csv.empty()) std::cout << csv;
            return;
        }
        if (format == "csv" && !csv.empty()) {
            std::ofstream f(path);
            f << csv;
            std::ofstream m(path + ".manifest.json");
            m << doc.dump(2) << "\n";
        } else {
            std::ofstream f(path);
            f << doc.dump(2) << "\n";
        }
    }
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("COBLAB_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 12345;
}

json make_manifest(const std::string& command, const json& params, std::uint64_t seed,
                   double runtime_sec) {
    return json{{"command", command},
                {"params", params},
                {"seed", seed},
                {"code_version", kVersion},
                {"schema_version", kFaceIndexSchemaVersion},
                {"runtime_sec", runtime_sec}};
}

// Shared complex selection flags for the commands that act on a complex.
struct ComplexSpec {
    std::string kind;  // T | Y | Y-union | simplex | y2np
    int n = 3;
    int d = 1;
    int k = 2;
    double p = 0.5;
    std::string input;  // Latin square JSON file for Y

    void attach(CLI::App* cmd) {
        cmd->add_option("--complex", kind, "complex family: T, Y, Y-union, simplex, y2np")
            ->required()
            ->check(CLI::IsMember({"T", "Y", "Y-union", "simplex", "y2np"}));
        cmd->add_option("--n", n, "size parameter");
        cmd->add_option("--d", d, "number of Latin squares (Y-union)");
        cmd->add_option("--k", k, "skeleton dimension (simplex)");
        cmd->add_option("--p", p, "triangle probability (y2np)");
        cmd->add_option("--in", input, "Latin square JSON file (Y)");
    }

    Complex2 build(std::uint64_t seed) const {
        Rng rng(seed);
        if (kind == "T") return build_T(n);
        if (kind == "Y") {
            if (!input.empty()) {
                std::ifstream f(input);
                if (!f) throw DimensionError("cannot open " + input);
                json j;
                f >> j;
                return build_Y(latin_from_json(j));
            }
            return build_Y(sample_uniform(n, rng));
        }
        if (kind == "Y-union") {
            std::vector<LatinSquare> squares;
            for (int i = 0; i < d; ++i) squares.push_back(sample_uniform(n, rng));
            return build_Y_union(squares);
        }
        if (kind == "simplex") return build_simplex_skeleton(n, k);
        return build_Y2np(n, p, rng);
    }

    json params() const {
        return json{{"complex", kind}, {"n", n}, {"d", d}, {"k", k}, {"p", p}};
    }
};

json expansion_report_json(const ExpansionReport& report) {
    json j{{"mode", report.exact ? "exact" : "heuristic"},
           {"witness_hex", report.witness.to_hex()},
           {"witness_coboundary_norm", report.witness_coboundary_norm},
           {"witness_coset_norm", report.witness_coset_norm}};
    if (report.exact) {
        j["value"] = report.value.str();
        j["value_real"] = report.value.value();
    } else {
        j["upper_bound_on_h1"] = report.estimate;
    }
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

PairSet random_pairset(int n, int size, Rng& rng) {
    PairSet pairs(n);
    while (pairs.size() < size)
        pairs.insert(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)));
    return pairs;
}

TriSet random_triset(int n, int size, Rng& rng) {
    TriSet triples(n);
    while (triples.size() < size)
        triples.insert(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)),
                       static_cast<int>(rng.below(n)));
    return triples;
}

std::vector<std::vector<int>> load_matrix(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DimensionError("cannot open " + path);
    json j;
    f >> j;
    return j.get<std::vector<std::vector<int>>>();
}

std::vector<std::vector<int>> random_matrix(int n, double density, Rng& rng) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (auto& row : m)
        for (auto& x : row) x = rng.uniform01() < density ? 1 : 0;
    return m;
}

int run(int argc, char** argv) {
    CLI::App app{"Latin-square 2-complex laboratory"};
    app.require_subcommand(1);

    std::uint64_t seed = default_seed();
    Output out;
    int threads = 0;
    app.add_option("--seed", seed, "64-bit RNG seed (env COBLAB_SEED as fallback)");
    app.add_option("--out", out.path, "output file (default stdout)");
    app.add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", threads, "worker cap (0: all cores)");

    // gen-latin
    auto* gen = app.add_subcommand("gen-latin", "sample a uniform Latin square");
    int gen_n = 4;
    std::int64_t gen_burnin = -1;
    gen->add_option("--n", gen_n, "order")->required();
    gen->add_option("--burnin", gen_burnin, "chain burn-in moves (default 2n^3)");

    // enum-latin
    auto* enu = app.add_subcommand("enum-latin", "enumerate all Latin squares, n <= 5");
    int enu_n = 3;
    enu->add_option("--n", enu_n, "order")->required();

    // build
    auto* build = app.add_subcommand("build", "construct a complex and print its faces");
    ComplexSpec build_spec;
    build_spec.attach(build);

    // links
    auto* links_cmd = app.add_subcommand("links", "vertex links of a complex");
    ComplexSpec links_spec;
    links_spec.attach(links_cmd);
    int links_vertex = -1;
    links_cmd->add_option("--vertex", links_vertex, "single vertex (default: all)");

    // h0
    auto* h0_cmd = app.add_subcommand("h0", "Cheeger constant of the 1-skeleton or a link");
    ComplexSpec h0_spec;
    h0_spec.attach(h0_cmd);
    int h0_link = -1;
    h0_cmd->add_option("--link", h0_link, "use the link of this vertex");

    // h1-exact
    auto* h1_cmd = app.add_subcommand("h1-exact", "exact h1 by full coset sweep");
    ComplexSpec h1_spec;
    h1_spec.attach(h1_cmd);

    // h1-estimate
    auto* h1e_cmd = app.add_subcommand("h1-estimate", "sampled upper bound on h1");
    ComplexSpec h1e_spec;
    h1e_spec.attach(h1e_cmd);
    int h1e_samples = 1000;
    h1e_cmd->add_option("--samples", h1e_samples, "number of sampled cochains");

    // cohomology
    auto* coh_cmd = app.add_subcommand("cohomology", "reduced F2 cohomology rank");
    ComplexSpec coh_spec;
    coh_spec.attach(coh_cmd);
    int coh_k = 1;
    coh_cmd->add_option("--degree", coh_k, "cohomology degree (0 or 1)");

    // spectral-links
    auto* spec_cmd = app.add_subcommand("spectral-links", "per-vertex link spectral gaps");
    ComplexSpec spec_spec;
    spec_spec.attach(spec_cmd);

    // tanner
    auto* tan_cmd = app.add_subcommand("tanner", "Alon-Milman/Tanner cut bound on a link");
    ComplexSpec tan_spec;
    tan_spec.attach(tan_cmd);
    int tan_link = -1;
    std::string tan_subset;
    tan_cmd->add_option("--link", tan_link, "use the link of this vertex");
    tan_cmd->add_option("--subset", tan_subset, "comma-separated vertex subset")->required();

    // prop31
    auto* p31_cmd = app.add_subcommand("prop31", "small-cochain bound check on sampled cochains");
    int p31_n = 4, p31_d = 3, p31_samples = 100;
    double p31_c = 0.5;
    int p31_support = -1;
    p31_cmd->add_option("--n", p31_n, "order");
    p31_cmd->add_option("--d", p31_d, "number of Latin squares");
    p31_cmd->add_option("--c", p31_c, "smallness threshold");
    p31_cmd->add_option("--samples", p31_samples, "sampled cochains");
    p31_cmd->add_option("--support", p31_support, "support size of sampled cochains (default c n^2 / 2)");

    // claim32
    auto* c32_cmd = app.add_subcommand("claim32", "degree-sum inequality on random admissible graphs");
    int c32_n = 8, c32_samples = 10000;
    double c32_c = 0.5;
    c32_cmd->add_option("--n", c32_n, "part size n (graph on 3n vertices)");
    c32_cmd->add_option("--c", c32_c, "smallness parameter");
    c32_cmd->add_option("--samples", c32_samples, "random graphs");

    // permanent / bregman
    auto* per_cmd = app.add_subcommand("permanent", "exact permanent of a 0/1 matrix");
    std::string per_in;
    int per_random_n = 0;
    double per_density = 0.5;
    per_cmd->add_option("--in", per_in, "JSON matrix file");
    per_cmd->add_option("--random-n", per_random_n, "random matrix of this size instead");
    per_cmd->add_option("--density", per_density, "random matrix density");

    auto* breg_cmd = app.add_subcommand("bregman", "Bregman row-sum bound, with exact comparison for n <= 20");
    std::string breg_in;
    int breg_random_n = 0;
    double breg_density = 0.5;
    breg_cmd->add_option("--in", breg_in, "JSON matrix file");
    breg_cmd->add_option("--random-n", breg_random_n, "random matrix of this size instead");
    breg_cmd->add_option("--density", breg_density, "random matrix density");

    // sefperm
    auto* sef_cmd = app.add_subcommand("sefperm", "permanent identity for S(E,F,m) on a random system");
    int sef_n = 5, sef_k = 1, sef_esize = -1;
    sef_cmd->add_option("--n", sef_n, "order (<= 8)");
    sef_cmd->add_option("--k", sef_k, "forbidden-set size");
    sef_cmd->add_option("--esize", sef_esize, "|E| (default n^2/2)");

    // prop42
    auto* p42_cmd = app.add_subcommand("prop42", "restricted-permutation count bound");
    int p42_n = 7, p42_k = 1;
    double p42_gamma = 0.4;
    p42_cmd->add_option("--n", p42_n, "order (<= 8)");
    p42_cmd->add_option("--k", p42_k, "forbidden-set size");
    p42_cmd->add_option("--gamma", p42_gamma, "gamma");

    // prop43
    auto* p43_cmd = app.add_subcommand("prop43", "Latin-square family count bound");
    int p43_n = 4;
    double p43_gamma = 0.5;
    p43_cmd->add_option("--n", p43_n, "order (<= 5)");
    p43_cmd->add_option("--gamma", p43_gamma, "gamma");

    // nls-ratio
    auto* nls_cmd = app.add_subcommand("nls-ratio", "prod k!^{n/k} / |L_n| for n <= 5");
    int nls_n = 3;
    nls_cmd->add_option("--n", nls_n, "order (<= 5)")->required();

    // tail
    auto* tail_cmd = app.add_subcommand("tail", "observational tail experiment for f_CE");
    int tail_n = 30;
    double tail_c = 0.5;
    long tail_samples = 1000;
    std::string tail_ce = "random";
    std::int64_t tail_burnin = -1;
    tail_cmd->add_option("--n", tail_n, "order");
    tail_cmd->add_option("--c", tail_c, "density parameter");
    tail_cmd->add_option("--samples", tail_samples, "Latin square samples");
    tail_cmd->add_option("--ce", tail_ce, "all or random")->check(CLI::IsMember({"all", "random"}));
    tail_cmd->add_option("--burnin", tail_burnin, "chain burn-in (default 2n^3)");

    // d3-homology
    auto* d3_cmd = app.add_subcommand("d3-homology", "frequency of nonvanishing H^1 for Y(L^d)");
    int d3_n = 20, d3_d = 3;
    long d3_samples = 200;
    std::int64_t d3_burnin = -1;
    d3_cmd->add_option("--n", d3_n, "order");
    d3_cmd->add_option("--d", d3_d, "number of Latin squares");
    d3_cmd->add_option("--samples", d3_samples, "samples");
    d3_cmd->add_option("--burnin", d3_burnin, "chain burn-in (default 2n^3)");

    // constants
    auto* const_cmd = app.add_subcommand("constants", "the final constant chase, evaluated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&]() {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    if (*gen) {
        Rng rng(seed);
        SamplerParams params{gen_burnin};
        const auto square = sample_uniform(gen_n, rng, params);
        out.write(make_manifest("gen-latin",
                                json{{"n", gen_n}, {"burnin", params.moves_for(gen_n)}},
                                seed, elapsed()),
                  to_json(square));
        return 0;
    }
    if (*enu) {
        const auto squares = enumerate_latin(enu_n);
        json list = json::array();
        for (const auto& square : squares) list.push_back(to_json(square));
        out.write(make_manifest("enum-latin", json{{"n", enu_n}}, seed, elapsed()),
                  json{{"count", squares.size()}, {"squares", list}});
        return 0;
    }
    if (*build) {
        const auto complex = build_spec.build(seed);
        out.write(make_manifest("build", build_spec.params(), seed, elapsed()),
                  to_json(complex));
        return 0;
    }
    if (*links_cmd) {
        const auto complex = links_spec.build(seed);
        json result = json::array();
        const int lo = links_vertex >= 0 ? links_vertex : 0;
        const int hi = links_vertex >= 0 ? links_vertex + 1 : complex.vertex_count;
        for (int v = lo; v < hi; ++v) {
            const Graph g = link(complex, v);
            json edges = json::array();
            for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
            result.push_back(json{{"vertex", v},
                                  {"link_vertices", g.vertex_count},
                                  {"link_edges", edges}});
        }
        out.write(make_manifest("links", links_spec.params(), seed, elapsed()), result);
        return 0;
    }
    if (*h0_cmd) {
        const auto complex = h0_spec.build(seed);
        const Graph g = h0_link >= 0 ? link(complex, h0_link) : complex.one_skeleton();
        const auto report = h0_graph(g);
        out.write(make_manifest("h0", h0_spec.params(), seed, elapsed()),
                  expansion_report_json(report));
        return 0;
    }
    if (*h1_cmd) {
        const auto complex = h1_spec.build(seed);
        const auto report = h1_exact(complex, threads);
        out.write(make_manifest("h1-exact", h1_spec.params(), seed, elapsed()),
                  expansion_report_json(report));
        return 0;
    }
    if (*h1e_cmd) {
        const auto complex = h1e_spec.build(seed);
        Rng rng(seed);
        const auto report = h1_lower_estimate(complex, h1e_samples, rng);
        json params = h1e_spec.params();
        params["samples"] = h1e_samples;
        out.write(make_manifest("h1-estimate", params, seed, elapsed()),
                  expansion_report_json(report));
        return 0;
    }
    if (*coh_cmd) {
        const auto complex = coh_spec.build(seed);
        json params = coh_spec.params();
        params["degree"] = coh_k;
        out.write(make_manifest("cohomology", params, seed, elapsed()),
                  json{{"rank", cohomology_rank(complex, coh_k)}});
        return 0;
    }
    if (*spec_cmd) {
        const auto complex = spec_spec.build(seed);
        const auto report = min_link_gap(complex, threads);
        std::ostringstream csv;
        csv << "vertex,mu\n";
        json per = json::array();
        for (int v = 0; v < complex.vertex_count; ++v) {
            csv << v << "," << report.per_vertex[v] << "\n";
            per.push_back(report.per_vertex[v]);
        }
        out.write(make_manifest("spectral-links", spec_spec.params(), seed, elapsed()),
                  json{{"min_gap", report.min_gap}, {"per_vertex", per}}, csv.str());
        return 0;
    }
    if (*tan_cmd) {
        const auto complex = tan_spec.build(seed);
        const Graph g = tan_link >= 0 ? link(complex, tan_link) : complex.one_skeleton();
        std::vector<bool> mask(g.vertex_count, false);
        std::stringstream ss(tan_subset);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const int v = std::stoi(item);
            if (v < 0 || v >= g.vertex_count) throw DimensionError("tanner: vertex out of range");
            mask[v] = true;
        }
        const auto check = tanner_check(g, mask);
        json params = tan_spec.params();
        params["subset"] = tan_subset;
        out.write(make_manifest("tanner", params, seed, elapsed()),
                  json{{"cut", check.cut}, {"bound", check.bound},
                       {"slack", check.slack}, {"pass", check.pass}});
        return 0;
    }
    if (*p31_cmd) {
        Rng rng(seed);
        std::vector<LatinSquare> squares;
        for (int i = 0; i < p31_d; ++i) squares.push_back(sample_uniform(p31_n, rng));
        const auto complex = build_Y_union(squares);
        const int support = p31_support > 0
                                ? p31_support
                                : std::max(1, static_cast<int>(p31_c * p31_n * p31_n / 2));
        std::vector<Cochain> phis;
        for (int s = 0; s < p31_samples; ++s) {
            Cochain phi(complex, 1);
            for (int b = 0; b < support; ++b)
                phi.bits.set(rng.below(complex.edge_count()), true);
            phis.push_back(std::move(phi));
        }
        const auto checks = verify_prop31(complex, p31_c, phis);
        long pass = 0, vacuous = 0, skipped = 0;
        for (const auto& check : checks) {
            if (check.pass) ++pass;
            if (check.vacuous) ++vacuous;
            if (check.skipped) ++skipped;
        }
        out.write(make_manifest("prop31",
                                json{{"n", p31_n}, {"d", p31_d}, {"c", p31_c},
                                     {"samples", p31_samples}},
                                seed, elapsed()),
                  json{{"pass", pass}, {"total", checks.size()},
                       {"vacuous", vacuous}, {"skipped", skipped},
                       {"all_pass", pass == static_cast<long>(checks.size())}});
        return 0;
    }
    if (*c32_cmd) {
        Rng rng(seed);
        long pass = 0, rejected = 0;
        const int n = c32_n;
        const int max_edges = static_cast<int>(c32_c * n * n);
        for (int s = 0; s < c32_samples; ++s) {
            // random graph on 3n vertices meeting the claim preconditions
            const int m = 1 + static_cast<int>(rng.below(std::max(1, max_edges)));
            std::vector<std::pair<int, int>> edges;
            std::vector<int> degree(3 * n, 0);
            int guard = 0;
            while (static_cast<int>(edges.size()) < m && ++guard < 50 * m) {
                const int u = static_cast<int>(rng.below(3 * n));
                const int v = static_cast<int>(rng.below(3 * n));
                if (u == v || degree[u] >= n || degree[v] >= n) continue;
                edges.emplace_back(std::min(u, v), std::max(u, v));
                ++degree[u];
                ++degree[v];
            }
            const Graph g(3 * n, edges);
            const auto check = verify_claim32(g, c32_c, n);
            if (check.rejected) { ++rejected; continue; }
            if (check.pass) ++pass;
        }
        out.write(make_manifest("claim32",
                                json{{"n", c32_n}, {"c", c32_c}, {"samples", c32_samples}},
                                seed, elapsed()),
                  json{{"pass", pass}, {"rejected", rejected},
                       {"violations", c32_samples - rejected - pass}});
        return 0;
    }
    if (*per_cmd) {
        if (per_in.empty() && per_random_n <= 0)
            throw DimensionError("permanent: need --in or --random-n");
        Rng rng(seed);
        const auto m = per_in.empty() ? random_matrix(per_random_n, per_density, rng)
                                      : load_matrix(per_in);
        out.write(make_manifest("permanent",
                                json{{"in", per_in}, {"random_n", per_random_n}},
                                seed, elapsed()),
                  json{{"n", m.size()}, {"permanent", uint128_str(permanent_exact(m))}});
        return 0;
    }
    if (*breg_cmd) {
        if (breg_in.empty() && breg_random_n <= 0)
            throw DimensionError("bregman: need --in or --random-n");
        Rng rng(seed);
        const auto m = breg_in.empty() ? random_matrix(breg_random_n, breg_density, rng)
                                       : load_matrix(breg_in);
        json result{{"n", m.size()}, {"bound", bregman_bound(m)}};
        if (m.size() <= 20) result["permanent"] = uint128_str(permanent_exact(m));
        out.write(make_manifest("bregman",
                                json{{"in", breg_in}, {"random_n", breg_random_n}},
                                seed, elapsed()),
                  result);
        return 0;
    }
    if (*sef_cmd) {
        Rng rng(seed);
        const int esize = sef_esize > 0 ? sef_esize : sef_n * sef_n / 2;
        const auto E = random_pairset(sef_n, esize, rng);
        std::vector<std::vector<int>> forbidden(sef_n);
        for (auto& B : forbidden)
            while (static_cast<int>(B.size()) < sef_k) {
                const int j = static_cast<int>(rng.below(sef_n));
                if (std::find(B.begin(), B.end(), j) == B.end()) B.push_back(j);
            }
        const RestrictionSystem sys(E, forbidden);
        json per_m = json::array();
        bool all = true;
        for (int m = 0; m <= sef_n; ++m) {
            const auto result = count_SEFm(sys, m);
            all = all && result.identity_holds;
            per_m.push_back(json{{"m", m},
                                 {"brute", result.brute_count},
                                 {"permanent_sum", uint128_str(result.permanent_sum)},
                                 {"equal", result.identity_holds}});
        }
        out.write(make_manifest("sefperm",
                                json{{"n", sef_n}, {"k", sef_k}, {"esize", esize}},
                                seed, elapsed()),
                  json{{"per_m", per_m}, {"identity_holds", all}});
        return 0;
    }
    if (*p42_cmd) {
        Rng rng(seed);
        // admissible E: per-row sets of size exactly n/2 keep ell(E) <= n/2
        PairSet E(p42_n);
        const int per_row = p42_n / 2;
        for (int i = 0; i < p42_n; ++i)
            while (static_cast<int>(E.row_sets[i].size()) < per_row)
                E.insert(i, static_cast<int>(rng.below(p42_n)));
        std::vector<std::vector<int>> forbidden(p42_n);
        for (auto& B : forbidden)
            while (static_cast<int>(B.size()) < p42_k) {
                const int j = static_cast<int>(rng.below(p42_n));
                if (std::find(B.begin(), B.end(), j) == B.end()) B.push_back(j);
            }
        const RestrictionSystem sys(E, forbidden);
        const auto check = check_prop42(sys, p42_gamma);
        out.write(make_manifest("prop42",
                                json{{"n", p42_n}, {"k", p42_k}, {"gamma", p42_gamma}},
                                seed, elapsed()),
                  json{{"lhs", check.lhs}, {"rhs", check.rhs},
                       {"rejected", check.rejected}, {"reason", check.reason},
                       {"pass", check.pass}});
        return 0;
    }
    if (*p43_cmd) {
        Rng rng(seed);
        std::vector<PairSet> Es;
        const int per_row = p43_n / 2;
        for (int i = 0; i < p43_n; ++i) {
            PairSet E(p43_n);
            for (int r = 0; r < p43_n; ++r)
                while (static_cast<int>(E.row_sets[r].size()) < per_row)
                    E.insert(r, static_cast<int>(rng.below(p43_n)));
            Es.push_back(std::move(E));
        }
        const int want = static_cast<int>(std::ceil(p43_gamma * p43_n / 2.0));
        std::vector<int> I;
        for (int i = 0; i < want; ++i) I.push_back(i);
        const auto check = check_prop43(p43_n, p43_gamma, Es, I);
        out.write(make_manifest("prop43",
                                json{{"n", p43_n}, {"gamma", p43_gamma}},
                                seed, elapsed()),
                  json{{"lhs", check.lhs}, {"rhs", check.rhs},
                       {"rejected", check.rejected}, {"reason", check.reason},
                       {"pass", check.pass}});
        return 0;
    }
    if (*nls_cmd) {
        const auto result = nls_ratio(nls_n);
        out.write(make_manifest("nls-ratio", json{{"n", nls_n}}, seed, elapsed()),
                  json{{"latin_count", result.latin_count},
                       {"log_product", result.log_product},
                       {"ratio", result.ratio},
                       {"at_least_one", result.at_least_one}});
        return 0;
    }
    if (*tail_cmd) {
        Rng rng(seed ^ 0x7a11);
        TriSet ce(tail_n);
        if (tail_ce == "all") {
            for (int i = 0; i < tail_n; ++i)
                for (int j = 0; j < tail_n; ++j)
                    for (int k = 0; k < tail_n; ++k) ce.insert(i, j, k);
        } else {
            const int size = static_cast<int>(std::ceil(tail_c * std::pow(tail_n, 3)));
            ce = random_triset(tail_n, size, rng);
        }
        const auto report =
            tail_experiment(tail_n, tail_c, ce, tail_samples, seed, SamplerParams{tail_burnin});
        std::ostringstream csv;
        csv << "sample,f\n";
        for (long i = 0; i < report.samples; ++i) csv << i << "," << report.f_values[i] << "\n";
        out.write(make_manifest("tail",
                                json{{"n", tail_n}, {"c", tail_c},
                                     {"samples", tail_samples}, {"ce", tail_ce}},
                                seed, elapsed()),
                  json{{"threshold", report.threshold},
                       {"reference_bound", report.reference_bound},
                       {"below_threshold", report.below_threshold},
                       {"tail_mass", report.tail_mass},
                       {"empirical_mean", report.empirical_mean},
                       {"expected_mean", report.expected_mean},
                       {"note", "observational: the asymptotic threshold n0(c) is unspecified"}},
                  csv.str());
        return 0;
    }
    if (*d3_cmd) {
        const auto report = h1_nonvanishing_experiment(d3_n, d3_d, d3_samples, seed,
                                                       SamplerParams{d3_burnin});
        std::ostringstream csv;
        csv << "sample,h1_rank\n";
        for (long i = 0; i < report.samples; ++i) csv << i << "," << report.ranks[i] << "\n";
        out.write(make_manifest("d3-homology",
                                json{{"n", d3_n}, {"d", d3_d}, {"samples", d3_samples}},
                                seed, elapsed()),
                  json{{"nonvanishing", report.nonvanishing},
                       {"frequency", report.frequency},
                       {"wilson95_low", report.interval.low},
                       {"wilson95_high", report.interval.high},
                       {"asymptotic_reference", report.asymptotic_reference}},
                  csv.str());
        return 0;
    }
    if (*const_cmd) {
        const double c = 1e-3;
        const int d_check = 201;
        const double mu = d_check - 3.0 * std::sqrt(static_cast<double>(d_check));
        const auto bound201 = small_cochain_bound(c, mu, d_check);
        const double d_final = 1e11;
        const double epsilon = 1e-5 * c * c;
        const bool union_bound_ok = std::log(8.0) < 4e-5 * d_final * c * c;
        out.write(make_manifest("constants", json::object(), seed, elapsed()),
                  json{{"c", c},
                       {"small_cochain_bound_at_d201", bound201.bound},
                       {"bound_exceeds_one_for_d_gt_200", bound201.bound > 1.0},
                       {"d_final", d_final},
                       {"epsilon", epsilon},
                       {"epsilon_is_1e-11", std::abs(epsilon - 1e-11) < 1e-26},
                       {"union_bound_margin_ok", union_bound_ok}});
        return 0;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const coblab::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const coblab::InvariantError& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const coblab::DimensionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
}
