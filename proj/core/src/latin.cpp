#include "coblab/latin.hpp"

#include <algorithm>
#include <numeric>

namespace coblab {

bool Permutation::is_valid() const {
    const int m = n();
    std::vector<bool> seen(m, false);
    for (int v : image) {
        if (v < 0 || v >= m || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image.resize(n);
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
}

bool LatinSquare::operator==(const LatinSquare& other) const {
    if (n() != other.n()) return false;
    for (int i = 0; i < n(); ++i)
        if (rows[i].image != other.rows[i].image) return false;
    return true;
}

bool LatinSquare::operator<(const LatinSquare& other) const {
    for (int i = 0; i < n() && i < other.n(); ++i)
        if (rows[i].image != other.rows[i].image)
            return rows[i].image < other.rows[i].image;
    return n() < other.n();
}

LatinSquare LatinSquare::cyclic(int n) {
    LatinSquare square;
    square.rows.resize(n);
    for (int i = 0; i < n; ++i) {
        square.rows[i].image.resize(n);
        for (int j = 0; j < n; ++j) square.rows[i].image[j] = (i + j) % n;
    }
    return square;
}

bool is_legal(const std::vector<Permutation>& rows) {
    if (rows.empty()) return true;
    const int n = rows[0].n();
    for (const auto& row : rows)
        if (row.n() != n) throw DimensionError("is_legal: rows of mixed length");
    for (const auto& row : rows)
        if (!row.is_valid()) return false;
    // pi_i pi_j^{-1} fixed-point free <=> rows i, j never agree at a column
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            for (int m = 0; m < n; ++m)
                if (rows[i].image[m] == rows[j].image[m]) return false;
    return true;
}

bool is_legal(const LatinSquare& square) { return is_legal(square.rows); }

namespace {

void enumerate_rec(int n, int row, int col,
                   std::vector<std::vector<int>>& grid,
                   std::vector<std::uint32_t>& col_used,
                   std::uint32_t row_used,
                   std::vector<LatinSquare>& out) {
    if (row == n) {
        LatinSquare square;
        square.rows.resize(n);
        for (int i = 0; i < n; ++i) square.rows[i].image = grid[i];
        out.push_back(std::move(square));
        return;
    }
    if (col == n) {
        enumerate_rec(n, row + 1, 0, grid, col_used, 0, out);
        return;
    }
    for (int v = 0; v < n; ++v) {
        const std::uint32_t bit = 1u << v;
        if ((row_used & bit) || (col_used[col] & bit)) continue;
        grid[row][col] = v;
        col_used[col] |= bit;
        enumerate_rec(n, row, col + 1, grid, col_used, row_used | bit, out);
        col_used[col] &= ~bit;
    }
}

}  // namespace

std::vector<LatinSquare> enumerate_latin(int n) {
    if (n < 1) throw DimensionError("enumerate_latin: n must be positive");
    if (n > 5) throw CapacityError("enumerate_latin: capped at n <= 5");
    std::vector<LatinSquare> out;
    std::vector<std::vector<int>> grid(n, std::vector<int>(n, -1));
    std::vector<std::uint32_t> col_used(n, 0);
    enumerate_rec(n, 0, 0, grid, col_used, 0, out);
    // ascending-value DFS already yields row-major lexicographic order
    return out;
}

namespace {

// Jacobson-Matthews walk on the {0,1} incidence cube, allowing a single
// -1 cell in improper states. Lines through the -1 cell hold two +1
// entries, everything else holds one, so two slots per line suffice.
struct Slot {
    int a = -1;
    int b = -1;

    void add(int v) {
        if (a < 0) a = v;
        else b = v;
    }
    void remove(int v) {
        if (b == v) { b = -1; return; }
        a = b;
        b = -1;
    }
    bool has(int v) const { return a == v || b == v; }
    int pick(Rng& rng) const { return (b >= 0 && rng.coin()) ? b : a; }
};

class JmChain {
public:
    explicit JmChain(const LatinSquare& start)
        : n_(start.n()), sym_(n_ * n_), col_(n_ * n_), row_(n_ * n_) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) add(i, j, start.rows[i].image[j]);
    }

    void step(Rng& rng) {
        int r0, c0, s0, s1, c1, r1;
        if (improper_) {
            r0 = mr_; c0 = mc_; s0 = ms_;
            s1 = sym_[r0 * n_ + c0].pick(rng);
            c1 = col_[r0 * n_ + s0].pick(rng);
            r1 = row_[c0 * n_ + s0].pick(rng);
            improper_ = false;  // the -1 cell gets +1 and cancels
        } else {
            r0 = static_cast<int>(rng.below(n_));
            c0 = static_cast<int>(rng.below(n_));
            s1 = sym_[r0 * n_ + c0].a;
            s0 = static_cast<int>(rng.below(n_ - 1));
            if (s0 >= s1) ++s0;  // any symbol other than the current one
            c1 = col_[r0 * n_ + s0].a;
            r1 = row_[c0 * n_ + s0].a;
            add(r0, c0, s0);
        }
        add(r0, c1, s1);
        add(r1, c0, s1);
        add(r1, c1, s0);
        sub(r0, c0, s1);
        sub(r0, c1, s0);
        sub(r1, c0, s0);
        // (r1, c1, s1) may be absent: it drops to -1 and the state turns improper
        if (sym_[r1 * n_ + c1].has(s1)) {
            sub(r1, c1, s1);
        } else {
            improper_ = true;
            mr_ = r1; mc_ = c1; ms_ = s1;
        }
    }

    bool improper() const { return improper_; }

    LatinSquare to_square() const {
        LatinSquare square;
        square.rows.resize(n_);
        for (int i = 0; i < n_; ++i) {
            square.rows[i].image.resize(n_);
            for (int j = 0; j < n_; ++j) square.rows[i].image[j] = sym_[i * n_ + j].a;
        }
        return square;
    }

private:
    void add(int r, int c, int s) {
        sym_[r * n_ + c].add(s);
        col_[r * n_ + s].add(c);
        row_[c * n_ + s].add(r);
    }
    void sub(int r, int c, int s) {
        sym_[r * n_ + c].remove(s);
        col_[r * n_ + s].remove(c);
        row_[c * n_ + s].remove(r);
    }

    int n_;
    std::vector<Slot> sym_;  // (r, c) -> symbols
    std::vector<Slot> col_;  // (r, s) -> columns
    std::vector<Slot> row_;  // (c, s) -> rows
    bool improper_ = false;
    int mr_ = -1, mc_ = -1, ms_ = -1;
};

}  // namespace

LatinSquare sample_uniform(int n, Rng& rng, const SamplerParams& params) {
    if (n < 1) throw DimensionError("sample_uniform: n must be positive");
    if (n == 1) return LatinSquare::cyclic(1);
    JmChain chain(LatinSquare::cyclic(n));
    const std::int64_t moves = params.moves_for(n);
    for (std::int64_t t = 0; t < moves; ++t) chain.step(rng);
    while (chain.improper()) chain.step(rng);
    return chain.to_square();
}

PairSet::PairSet(int n_, const std::vector<std::pair<int, int>>& pairs) : PairSet(n_) {
    for (auto [i, j] : pairs) insert(i, j);
}

void PairSet::insert(int i, int j) {
    if (!bitmap[i][j]) {
        bitmap[i][j] = true;
        row_sets[i].insert(std::lower_bound(row_sets[i].begin(), row_sets[i].end(), j), j);
    }
}

int PairSet::size() const {
    int c = 0;
    for (const auto& r : row_sets) c += static_cast<int>(r.size());
    return c;
}

int PairSet::max_row_size() const {
    int m = 0;
    for (const auto& r : row_sets) m = std::max(m, static_cast<int>(r.size()));
    return m;
}

std::vector<std::pair<int, int>> PairSet::sorted_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j : row_sets[i]) out.emplace_back(i, j);
    return out;
}

int TriSet::size() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), true));
}

int g_stat(const Permutation& pi, const PairSet& E) {
    if (pi.n() != E.n) throw DimensionError("g_stat: order mismatch");
    int c = 0;
    for (int i = 0; i < E.n; ++i)
        if (E.contains(i, pi(i))) ++c;
    return c;
}

int f_stat(const LatinSquare& square, const TriSet& CE) {
    if (square.n() != CE.n) throw DimensionError("f_stat: order mismatch");
    int c = 0;
    for (int i = 0; i < CE.n; ++i)
        for (int j = 0; j < CE.n; ++j)
            if (CE.contains(i, j, square.rows[i](j))) ++c;
    return c;
}

}  // namespace coblab
