#pragma once

#include <cstdint>
#include <vector>

#include "coblab/bitvec.hpp"
#include "coblab/complex2.hpp"
#include "coblab/errors.hpp"
#include "coblab/rng.hpp"

namespace coblab {

// Face-index schema version embedded in serialized cochains.
inline constexpr int kFaceIndexSchemaVersion = 1;

// F2-valued function on the k-faces of a fixed complex, k in {-1,0,1,2}.
// Degree -1 is the augmentation term: a single bit.
struct Cochain {
    const Complex2* complex = nullptr;
    int degree = 0;
    BitVec bits;

    Cochain() = default;
    Cochain(const Complex2& c, int k)
        : complex(&c), degree(k), bits(static_cast<std::size_t>(c.face_count(k))) {}

    std::size_t face_count() const { return bits.size(); }
};

// Bit-packed rectangular matrix over F2; rows of d_k live here.
class GF2Matrix {
public:
    GF2Matrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return row_data_[r].get(c); }
    void set(int r, int c, bool v) { row_data_[r].set(c, v); }
    BitVec& row(int r) { return row_data_[r]; }
    const BitVec& row(int r) const { return row_data_[r]; }

    // Row-echelon rank, left-to-right pivoting.
    int rank() const;
    // Same rank via right-to-left pivoting; independent cross-check route.
    int rank_reverse() const;

    BitVec multiply(const BitVec& x) const;

private:
    int rank_with_order(const std::vector<int>& col_order) const;

    int rows_;
    int cols_;
    std::vector<BitVec> row_data_;
};

// d_k phi: mod-2 sum of phi over the k-subfaces of each (k+1)-face.
// d_{-1}(a) is the constant-a 0-cochain.
Cochain coboundary(const Cochain& phi);

inline std::size_t support_norm(const Cochain& phi) { return phi.bits.popcount(); }

// Matrix of d_k: |X(k+1)| rows, |X(k)| columns.
GF2Matrix coboundary_matrix(const Complex2& complex, int k);

// Exact-norm enumeration cap: 2^24 coboundary shifts.
inline constexpr int kCosetExactCap = 24;

struct CosetNormResult {
    std::size_t norm = 0;
    bool exact = true;
    Cochain minimizer;  // an in-coset representative achieving the norm
};

// ||[phi]||: minimum support over phi + B^k. Exact for k=0 always and for
// k=1 when dim C^0 <= 24; otherwise requires allow_heuristic (greedy
// vertex-flip descent from random starts, upper bound only).
CosetNormResult coset_norm(const Cochain& phi, bool allow_heuristic = false,
                           int heuristic_starts = 64, std::uint64_t heuristic_seed = 1);

// dim ker d_k - rank d_{k-1}, reduced (the augmentation enters at k=0).
int cohomology_rank(const Complex2& complex, int k);

}  // namespace coblab
