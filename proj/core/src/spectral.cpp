#include "coblab/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "coblab/errors.hpp"

namespace coblab {

std::vector<double> laplacian(const Graph& graph) {
    const int n = graph.vertex_count;
    std::vector<double> L(static_cast<std::size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v) L[v * n + v] = graph.degree(v);
    for (auto [u, v] : graph.edges) {
        L[u * n + v] = -1.0;
        L[v * n + u] = -1.0;
    }
    return L;
}

namespace {

double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction of a symmetric matrix to tridiagonal form
// (diagonal d, off-diagonal e). Classic tred2, eigenvectors dropped.
void tridiagonalize(std::vector<double>& a, int n,
                    std::vector<double>& d, std::vector<double>& e) {
    d.assign(n, 0.0);
    e.assign(n, 0.0);
    for (int i = n - 1; i > 0; --i) {
        const int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a[i * n + k]);
            if (scale == 0.0) {
                e[i] = a[i * n + l];
            } else {
                for (int k = 0; k <= l; ++k) {
                    a[i * n + k] /= scale;
                    h += a[i * n + k] * a[i * n + k];
                }
                double f = a[i * n + l];
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a[i * n + l] = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a[j * n + k] * a[i * n + k];
                    for (int k = j + 1; k <= l; ++k) g += a[k * n + j] * a[i * n + k];
                    e[j] = g / h;
                    f += e[j] * a[i * n + j];
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a[i * n + j];
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k)
                        a[j * n + k] -= f * e[k] + g * a[i * n + k];
                }
            }
        } else {
            e[i] = a[i * n + l];
        }
        d[i] = h;
    }
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) d[i] = a[i * n + i];
}

// Implicit-shift QL on a tridiagonal matrix. Eigenvalues only.
void ql_implicit(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m == l) break;
            if (++iter > 50) throw std::runtime_error("ql_implicit: no convergence");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = hypot2(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = hypot2(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = (i >= l);
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

// Number of eigenvalues of the tridiagonal (d, e) strictly less than x,
// by Sturm sequence sign counting.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
    const int n = static_cast<int>(d.size());
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        const double off = i == 0 ? 0.0 : e[i];
        double denom = q;
        if (std::abs(denom) < 1e-300) denom = denom >= 0 ? 1e-300 : -1e-300;
        q = d[i] - x - off * off / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n) {
    if (n == 0) return {};
    if (n == 1) return {matrix[0]};
    std::vector<double> d, e;
    tridiagonalize(matrix, n, d, e);
    ql_implicit(d, e);
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<double> symmetric_eigenvalues_bisection(std::vector<double> matrix, int n) {
    if (n == 0) return {};
    if (n == 1) return {matrix[0]};
    std::vector<double> d, e;
    tridiagonalize(matrix, n, d, e);
    // Gershgorin interval
    double lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        const double r = std::abs(i > 0 ? e[i] : 0.0) + std::abs(i + 1 < n ? e[i + 1] : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    lo -= 1.0;
    hi += 1.0;
    std::vector<double> out(n);
    for (int k = 0; k < n; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 100 && b - a > 1e-12 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(d, e, mid) > k) b = mid; else a = mid;
        }
        out[k] = 0.5 * (a + b);
    }
    return out;
}

LaplacianSpectrum laplacian_spectrum(const Graph& graph) {
    LaplacianSpectrum spectrum;
    const int n = graph.vertex_count;
    if (n == 0) return spectrum;
    spectrum.eigenvalues = symmetric_eigenvalues(laplacian(graph), n);
    spectrum.mu = n >= 2 ? spectrum.eigenvalues[1] : 0.0;
    return spectrum;
}

double spectral_gap(const Graph& graph) {
    if (graph.vertex_count > 5000)
        throw CapacityError("spectral_gap: dense solver capped at 5000 vertices");
    return laplacian_spectrum(graph).mu;
}

MinLinkGapReport min_link_gap(const Complex2& complex, int threads) {
    const int n = complex.vertex_count;
    MinLinkGapReport report;
    report.per_vertex.assign(n, 0.0);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, n));

    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int v = next.fetch_add(1);
            if (v >= n) return;
            report.per_vertex[v] = spectral_gap(link(complex, v));
        }
    };
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    report.min_gap = n > 0 ? *std::min_element(report.per_vertex.begin(),
                                               report.per_vertex.end())
                           : 0.0;
    return report;
}

TannerCheck tanner_check(const Graph& graph, const std::vector<bool>& in_s) {
    const int n = graph.vertex_count;
    if (static_cast<int>(in_s.size()) != n)
        throw DimensionError("tanner_check: mask size mismatch");
    long s = std::count(in_s.begin(), in_s.end(), true);
    if (s == 0 || s == n)
        throw DimensionError("tanner_check: S must be a nonempty proper subset");
    TannerCheck check;
    check.cut = graph.cut_size(in_s);
    check.bound = static_cast<double>(s) * (n - s) * spectral_gap(graph) / n;
    check.slack = check.cut - check.bound;
    check.pass = check.slack >= -1e-7 * std::max(1.0, check.bound);
    return check;
}

}  // namespace coblab
