#include "coblab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace coblab {

GF2Matrix::GF2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), row_data_(rows, BitVec(cols)) {}

int GF2Matrix::rank_with_order(const std::vector<int>& col_order) const {
    std::vector<BitVec> work(row_data_);
    int rank = 0;
    for (int col : col_order) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (work[r].get(col)) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(work[rank], work[pivot]);
        for (int r = rank + 1; r < rows_; ++r)
            if (work[r].get(col)) work[r].xor_in(work[rank]);
        ++rank;
        if (rank == rows_) break;
    }
    return rank;
}

int GF2Matrix::rank() const {
    std::vector<int> order(cols_);
    std::iota(order.begin(), order.end(), 0);
    return rank_with_order(order);
}

int GF2Matrix::rank_reverse() const {
    std::vector<int> order(cols_);
    for (int i = 0; i < cols_; ++i) order[i] = cols_ - 1 - i;
    return rank_with_order(order);
}

BitVec GF2Matrix::multiply(const BitVec& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DimensionError("GF2Matrix::multiply: size mismatch");
    BitVec y(rows_);
    for (int r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < x.word_count(); ++w)
            acc ^= row_data_[r].word(w) & x.word(w);
        y.set(r, std::popcount(acc) & 1);
    }
    return y;
}

Cochain coboundary(const Cochain& phi) {
    const Complex2& X = *phi.complex;
    switch (phi.degree) {
        case -1: {
            Cochain out(X, 0);
            if (phi.bits.get(0))
                for (int v = 0; v < X.vertex_count; ++v) out.bits.set(v, true);
            return out;
        }
        case 0: {
            Cochain out(X, 1);
            for (int e = 0; e < X.edge_count(); ++e) {
                const auto [u, v] = X.edges[e];
                out.bits.set(e, phi.bits.get(u) ^ phi.bits.get(v));
            }
            return out;
        }
        case 1: {
            Cochain out(X, 2);
            for (int t = 0; t < X.triangle_count(); ++t) {
                const auto& te = X.triangle_edges[t];
                out.bits.set(t, phi.bits.get(te[0]) ^ phi.bits.get(te[1]) ^ phi.bits.get(te[2]));
            }
            return out;
        }
        default:
            throw DimensionError("coboundary: no faces above degree 2");
    }
}

GF2Matrix coboundary_matrix(const Complex2& complex, int k) {
    switch (k) {
        case -1: {
            GF2Matrix m(complex.vertex_count, 1);
            for (int v = 0; v < complex.vertex_count; ++v) m.set(v, 0, true);
            return m;
        }
        case 0: {
            GF2Matrix m(complex.edge_count(), complex.vertex_count);
            for (int e = 0; e < complex.edge_count(); ++e) {
                m.set(e, complex.edges[e].first, true);
                m.set(e, complex.edges[e].second, true);
            }
            return m;
        }
        case 1: {
            GF2Matrix m(complex.triangle_count(), complex.edge_count());
            for (int t = 0; t < complex.triangle_count(); ++t)
                for (int e : complex.triangle_edges[t]) m.set(t, e, true);
            return m;
        }
        default:
            throw DimensionError("coboundary_matrix: k must be -1, 0 or 1");
    }
}

namespace {

// Edge mask of the star of each vertex, as raw words.
std::vector<std::vector<std::uint64_t>> star_masks(const Complex2& X) {
    const std::size_t W = (X.edge_count() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> stars(X.vertex_count,
                                                  std::vector<std::uint64_t>(W, 0));
    for (int e = 0; e < X.edge_count(); ++e) {
        stars[X.edges[e].first][e >> 6] |= 1ULL << (e & 63);
        stars[X.edges[e].second][e >> 6] |= 1ULL << (e & 63);
    }
    return stars;
}

CosetNormResult coset_norm_exact1(const Cochain& phi) {
    const Complex2& X = *phi.complex;
    const int V = X.vertex_count;
    const std::size_t W = phi.bits.word_count();
    const auto stars = star_masks(X);

    std::vector<std::uint64_t> cur(phi.bits.data(), phi.bits.data() + W);
    std::size_t pop = phi.bits.popcount();
    std::size_t best = pop;
    std::uint32_t best_psi = 0;

    // Gray sweep over all psi in C^0; step t flips vertex ctz(t).
    const std::uint64_t total = 1ULL << V;
    for (std::uint64_t t = 1; t < total; ++t) {
        const int v = std::countr_zero(t);
        for (std::size_t w = 0; w < W; ++w) {
            const std::uint64_t sw = stars[v][w];
            if (!sw) continue;
            pop -= std::popcount(cur[w]);
            cur[w] ^= sw;
            pop += std::popcount(cur[w]);
        }
        if (pop < best) {
            best = pop;
            best_psi = static_cast<std::uint32_t>(t ^ (t >> 1));
        }
    }

    CosetNormResult result;
    result.norm = best;
    result.exact = true;
    result.minimizer = phi;
    for (int v = 0; v < V; ++v)
        if ((best_psi >> v) & 1)
            for (std::size_t w = 0; w < W; ++w)
                result.minimizer.bits.data()[w] ^= stars[v][w];
    return result;
}

CosetNormResult coset_norm_heuristic1(const Cochain& phi, int starts, std::uint64_t seed) {
    const Complex2& X = *phi.complex;
    const int V = X.vertex_count;
    const std::size_t W = phi.bits.word_count();
    const auto stars = star_masks(X);
    Rng rng(seed);

    CosetNormResult result;
    result.exact = false;
    result.norm = support_norm(phi);
    result.minimizer = phi;

    for (int s = 0; s < starts; ++s) {
        std::vector<std::uint64_t> cur(phi.bits.data(), phi.bits.data() + W);
        if (s > 0) {
            for (int v = 0; v < V; ++v)
                if (rng.coin())
                    for (std::size_t w = 0; w < W; ++w) cur[w] ^= stars[v][w];
        }
        auto popcnt = [&](const std::vector<std::uint64_t>& x) {
            std::size_t c = 0;
            for (auto w : x) c += std::popcount(w);
            return c;
        };
        std::size_t pop = popcnt(cur);
        // steepest single-vertex descent
        for (;;) {
            int best_v = -1;
            long best_delta = 0;
            for (int v = 0; v < V; ++v) {
                long delta = 0;
                for (std::size_t w = 0; w < W; ++w) {
                    if (!stars[v][w]) continue;
                    delta += std::popcount(cur[w] ^ stars[v][w]);
                    delta -= std::popcount(cur[w]);
                }
                if (delta < best_delta) { best_delta = delta; best_v = v; }
            }
            if (best_v < 0) break;
            for (std::size_t w = 0; w < W; ++w) cur[w] ^= stars[best_v][w];
            pop += best_delta;
        }
        if (pop < result.norm) {
            result.norm = pop;
            for (std::size_t w = 0; w < W; ++w) result.minimizer.bits.data()[w] = cur[w];
        }
    }
    return result;
}

}  // namespace

CosetNormResult coset_norm(const Cochain& phi, bool allow_heuristic,
                           int heuristic_starts, std::uint64_t heuristic_seed) {
    const Complex2& X = *phi.complex;
    if (phi.degree == 0) {
        // B^0 = {0, all-ones} from the augmentation
        const std::size_t pop = phi.bits.popcount();
        const std::size_t co = X.vertex_count - pop;
        CosetNormResult result;
        result.norm = std::min(pop, co);
        result.exact = true;
        result.minimizer = phi;
        if (co < pop)
            for (int v = 0; v < X.vertex_count; ++v) result.minimizer.bits.flip(v);
        return result;
    }
    if (phi.degree != 1)
        throw DimensionError("coset_norm: degree must be 0 or 1");
    if (X.vertex_count <= kCosetExactCap) return coset_norm_exact1(phi);
    if (!allow_heuristic)
        throw CapacityError("coset_norm: dim C^0 above exact cap; pass allow_heuristic");
    return coset_norm_heuristic1(phi, heuristic_starts, heuristic_seed);
}

int cohomology_rank(const Complex2& complex, int k) {
    if (k == 0) {
        const int rank_d0 = coboundary_matrix(complex, 0).rank();
        const int ker = complex.vertex_count - rank_d0;
        return ker - 1;  // rank d_{-1} = 1
    }
    if (k == 1) {
        const int rank_d1 = coboundary_matrix(complex, 1).rank();
        const int rank_d0 = coboundary_matrix(complex, 0).rank();
        return (complex.edge_count() - rank_d1) - rank_d0;
    }
    throw DimensionError("cohomology_rank: k must be 0 or 1");
}

}  // namespace coblab
