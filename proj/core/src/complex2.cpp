#include "coblab/complex2.hpp"

#include <algorithm>
#include <unordered_map>

namespace coblab {

Graph::Graph(int vertices, std::vector<std::pair<int, int>> edge_list)
    : vertex_count(vertices), edges(std::move(edge_list)), adjacency(vertices) {
    for (auto& [u, v] : edges) {
        if (u == v) throw InvariantError("Graph: loop edge");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= vertices) throw DimensionError("Graph: vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
}

int Graph::component_count() const {
    std::vector<int> parent(vertex_count);
    for (int i = 0; i < vertex_count; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = vertex_count;
    for (auto [u, v] : edges) {
        const int ru = find(u), rv = find(v);
        if (ru != rv) { parent[ru] = rv; --components; }
    }
    return components;
}

bool Graph::connected() const { return vertex_count <= 1 || component_count() == 1; }

int Graph::cut_size(const std::vector<bool>& in_s) const {
    int c = 0;
    for (auto [u, v] : edges)
        if (in_s[u] != in_s[v]) ++c;
    return c;
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
}

int Complex2::face_count(int k) const {
    switch (k) {
        case -1: return 1;
        case 0: return vertex_count;
        case 1: return edge_count();
        case 2: return triangle_count();
        default: throw DimensionError("Complex2: degree out of range");
    }
}

int Complex2::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

int Complex2::triangle_index(int u, int v, int w) const {
    std::array<int, 3> t{u, v, w};
    std::sort(t.begin(), t.end());
    const auto it = std::lower_bound(triangles.begin(), triangles.end(), t);
    if (it == triangles.end() || *it != t) return -1;
    return static_cast<int>(it - triangles.begin());
}

Complex2 Complex2::from_faces(int vertex_count,
                              std::vector<std::pair<int, int>> edges,
                              std::vector<std::array<int, 3>> triangles) {
    Complex2 complex;
    complex.vertex_count = vertex_count;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= vertex_count || u == v)
            throw InvariantError("Complex2: bad edge");
    }
    for (auto& t : triangles) {
        std::sort(t.begin(), t.end());
        if (t[0] < 0 || t[2] >= vertex_count || t[0] == t[1] || t[1] == t[2])
            throw InvariantError("Complex2: bad triangle");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(triangles.begin(), triangles.end());
    triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
    complex.edges = std::move(edges);
    complex.triangles = std::move(triangles);

    complex.triangle_edges.reserve(complex.triangles.size());
    for (const auto& t : complex.triangles) {
        const int e01 = complex.edge_index(t[0], t[1]);
        const int e02 = complex.edge_index(t[0], t[2]);
        const int e12 = complex.edge_index(t[1], t[2]);
        if (e01 < 0 || e02 < 0 || e12 < 0)
            throw InvariantError("Complex2: triangle edge missing (downward closure)");
        complex.triangle_edges.push_back({e01, e02, e12});
    }
    return complex;
}

Graph Complex2::one_skeleton() const {
    return Graph(vertex_count, edges);
}

namespace {

std::vector<std::pair<int, int>> tripartite_edges(int n) {
    TripartiteMeta meta{n};
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            edges.emplace_back(meta.a(i), meta.b(j));
            edges.emplace_back(meta.a(i), meta.c(j));
            edges.emplace_back(meta.b(i), meta.c(j));
        }
    return edges;
}

void attach_tripartite_labels(Complex2& complex, int n) {
    complex.tripartite = TripartiteMeta{n};
    complex.vertex_labels.resize(3 * n);
    for (int i = 0; i < n; ++i) {
        complex.vertex_labels[i] = "a" + std::to_string(i);
        complex.vertex_labels[n + i] = "b" + std::to_string(i);
        complex.vertex_labels[2 * n + i] = "c" + std::to_string(i);
    }
}

}  // namespace

Complex2 build_T(int n) {
    if (n < 1) throw DimensionError("build_T: n must be positive");
    TripartiteMeta meta{n};
    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                triangles.push_back({meta.a(i), meta.b(j), meta.c(k)});
    auto complex = Complex2::from_faces(3 * n, tripartite_edges(n), std::move(triangles));
    attach_tripartite_labels(complex, n);
    return complex;
}

Complex2 build_Y(const LatinSquare& square) {
    if (!is_legal(square)) throw InvariantError("build_Y: illegal Latin square");
    return build_Y_union({square});
}

Complex2 build_Y_union(const std::vector<LatinSquare>& squares) {
    if (squares.empty()) throw DimensionError("build_Y_union: empty list");
    const int n = squares[0].n();
    for (const auto& square : squares) {
        if (square.n() != n) throw DimensionError("build_Y_union: mixed orders");
        if (!is_legal(square)) throw InvariantError("build_Y_union: illegal Latin square");
    }
    TripartiteMeta meta{n};
    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(static_cast<std::size_t>(squares.size()) * n * n);
    for (const auto& square : squares)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                triangles.push_back({meta.a(i), meta.b(j), meta.c(square.rows[i](j))});
    auto complex = Complex2::from_faces(3 * n, tripartite_edges(n), std::move(triangles));
    attach_tripartite_labels(complex, n);
    return complex;
}

Complex2 build_simplex_skeleton(int n, int k) {
    if (k < 1 || k > 2) throw DimensionError("build_simplex_skeleton: k must be 1 or 2");
    if (n < k + 1) throw DimensionError("build_simplex_skeleton: too few vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    std::vector<std::array<int, 3>> triangles;
    if (k == 2)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                for (int w = v + 1; w < n; ++w) triangles.push_back({u, v, w});
    return Complex2::from_faces(n, std::move(edges), std::move(triangles));
}

Complex2 build_Y2np(int n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw DimensionError("build_Y2np: p outside [0,1]");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    std::vector<std::array<int, 3>> triangles;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (rng.uniform01() < p) triangles.push_back({u, v, w});
    return Complex2::from_faces(n, std::move(edges), std::move(triangles));
}

Graph link(const Complex2& complex, int v) {
    if (v < 0 || v >= complex.vertex_count)
        throw DimensionError("link: unknown vertex");
    // vertex set: 1-skeleton neighbors of v, compactly re-indexed
    std::vector<int> to_local(complex.vertex_count, -1);
    int next = 0;
    for (auto [a, b] : complex.edges) {
        if (a == v && to_local[b] < 0) to_local[b] = next++;
        if (b == v && to_local[a] < 0) to_local[a] = next++;
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& t : complex.triangles) {
        int u = -1, w = -1;
        if (t[0] == v) { u = t[1]; w = t[2]; }
        else if (t[1] == v) { u = t[0]; w = t[2]; }
        else if (t[2] == v) { u = t[0]; w = t[1]; }
        else continue;
        edges.emplace_back(to_local[u], to_local[w]);
    }
    return Graph(next, std::move(edges));
}

DegreeProfile edge_degree_profile(const Complex2& complex) {
    std::vector<int> degree(complex.edge_count(), 0);
    for (const auto& te : complex.triangle_edges)
        for (int e : te) ++degree[e];
    DegreeProfile profile;
    for (int d : degree) profile.max = std::max(profile.max, d);
    profile.histogram.assign(profile.max + 1, 0);
    for (int d : degree) ++profile.histogram[d];
    return profile;
}

}  // namespace coblab
