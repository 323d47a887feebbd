#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "coblab/errors.hpp"
#include "coblab/rng.hpp"

namespace coblab {

// A permutation of {0,...,n-1}; image[i] is where i goes.
struct Permutation {
    std::vector<int> image;

    int n() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[i]; }
    bool is_valid() const;

    static Permutation identity(int n);
};

// A Latin square of order n as a tuple of rows (pi_1,...,pi_n): row i,
// column j holds rows[i](j). Legality: distinct rows never agree at any
// column, so every column is itself a permutation.
struct LatinSquare {
    std::vector<Permutation> rows;

    int n() const { return static_cast<int>(rows.size()); }
    bool operator==(const LatinSquare& other) const;
    bool operator<(const LatinSquare& other) const;

    // Row i = j -> i + j mod n.
    static LatinSquare cyclic(int n);
};

bool is_legal(const std::vector<Permutation>& rows);
bool is_legal(const LatinSquare& square);

// All Latin squares of order n <= 5, lexicographically sorted by
// row-major image. |L_5| = 161280 is the practical ceiling.
std::vector<LatinSquare> enumerate_latin(int n);

struct SamplerParams {
    // Jacobson-Matthews +-1 moves from the cyclic square; 2n^3 is the
    // default burn-in, fresh walk per sample.
    std::int64_t burn_in = -1;  // -1: use 2n^3

    std::int64_t moves_for(int n) const {
        return burn_in >= 0 ? burn_in : 2LL * n * n * n;
    }
};

LatinSquare sample_uniform(int n, Rng& rng, const SamplerParams& params = {});

// A subset E of [n]^2, bitmap plus per-row sets A_i.
struct PairSet {
    int n = 0;
    std::vector<std::vector<bool>> bitmap;      // bitmap[i][j]
    std::vector<std::vector<int>> row_sets;     // A_i, sorted

    explicit PairSet(int n_) : n(n_), bitmap(n_, std::vector<bool>(n_, false)), row_sets(n_) {}
    PairSet(int n_, const std::vector<std::pair<int, int>>& pairs);

    void insert(int i, int j);
    bool contains(int i, int j) const { return bitmap[i][j]; }
    int size() const;
    int max_row_size() const;  // ell(E)
    std::vector<std::pair<int, int>> sorted_pairs() const;
};

// A subset of [n]^3; via (i,j,k) <-> [a_i, b_j, c_k] this indexes
// 2-simplices of T_n.
struct TriSet {
    int n = 0;
    std::vector<bool> bits;  // index i*n^2 + j*n + k

    explicit TriSet(int n_) : n(n_), bits(static_cast<std::size_t>(n_) * n_ * n_, false) {}

    void insert(int i, int j, int k) { bits[idx(i, j, k)] = true; }
    bool contains(int i, int j, int k) const { return bits[idx(i, j, k)]; }
    int size() const;
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n + j) * n + k;
    }
};

// g_E(pi) = |{i : (i, pi(i)) in E}|
int g_stat(const Permutation& pi, const PairSet& E);

// f_CE(L) = number of (i,j) with (i, j, pi_i(j)) in CE
int f_stat(const LatinSquare& square, const TriSet& CE);

}  // namespace coblab
