#pragma once

#include <vector>

#include "coblab/complex2.hpp"

namespace coblab {

inline constexpr double kEigenTolerance = 1e-9;

// Dense graph Laplacian, row-major |V| x |V|.
std::vector<double> laplacian(const Graph& graph);

// All eigenvalues of a symmetric matrix, ascending. Householder
// tridiagonalization followed by implicit-shift QL.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n);

// Same spectrum via Sturm-sequence bisection on the tridiagonal form;
// independent of the QL route.
std::vector<double> symmetric_eigenvalues_bisection(std::vector<double> matrix, int n);

struct LaplacianSpectrum {
    std::vector<double> eigenvalues;  // ascending
    double mu = 0.0;                  // second smallest
};

LaplacianSpectrum laplacian_spectrum(const Graph& graph);

// mu(G) = second-smallest Laplacian eigenvalue.
double spectral_gap(const Graph& graph);

struct MinLinkGapReport {
    double min_gap = 0.0;
    std::vector<double> per_vertex;  // mu(Y_v) for each vertex
};

// min over vertices of mu(lk(Y, v)); per-link solves run in a parallel map.
MinLinkGapReport min_link_gap(const Complex2& complex, int threads = 0);

struct TannerCheck {
    double cut = 0.0;
    double bound = 0.0;  // |S||V-S| mu / |V|
    double slack = 0.0;  // cut - bound
    bool pass = false;
};

// Alon-Milman / Tanner: e(S, V-S) >= |S||V-S| mu(G) / |V|.
TannerCheck tanner_check(const Graph& graph, const std::vector<bool>& in_s);

}  // namespace coblab
