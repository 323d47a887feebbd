#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coblab/errors.hpp"
#include "coblab/latin.hpp"
#include "coblab/rng.hpp"

namespace coblab {

// Simple undirected graph.
struct Graph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;     // u < v, sorted
    std::vector<std::vector<int>> adjacency;

    Graph() = default;
    Graph(int vertices, std::vector<std::pair<int, int>> edge_list);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    bool connected() const;
    int component_count() const;
    // Cut size e(S, V-S); S given as a membership mask over vertices.
    int cut_size(const std::vector<bool>& in_s) const;

    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);
};

// Part labels for the tripartite complexes. Canonical vertex indices:
// a_i -> i, b_j -> n + j, c_k -> 2n + k.
struct TripartiteMeta {
    int n = 0;

    enum class Part { A, B, C };
    Part part(int v) const { return static_cast<Part>(v / n); }
    int a(int i) const { return i; }
    int b(int j) const { return n + j; }
    int c(int k) const { return 2 * n + k; }
};

// A 2-dimensional simplicial complex with indexed, sorted face lists and
// downward closure. Faces store ascending vertex indices.
struct Complex2 {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;          // sorted
    std::vector<std::array<int, 3>> triangles;       // sorted
    std::vector<std::array<int, 3>> triangle_edges;  // triangle -> edge indices
    std::optional<TripartiteMeta> tripartite;
    std::vector<std::string> vertex_labels;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }
    int face_count(int k) const;  // k in {-1, 0, 1, 2}

    int edge_index(int u, int v) const;      // -1 if absent
    int triangle_index(int u, int v, int w) const;

    // Rebuilds indices and checks downward closure; every constructor
    // funnels through this.
    static Complex2 from_faces(int vertex_count,
                               std::vector<std::pair<int, int>> edges,
                               std::vector<std::array<int, 3>> triangles);

    Graph one_skeleton() const;
};

// Complete 3-partite complex T_n: 3n vertices, 3n^2 edges, n^3 triangles.
Complex2 build_T(int n);

// Y(L): complete tripartite 1-skeleton plus the n^2 triangles
// (a_i, b_j, c_{pi_i(j)}).
Complex2 build_Y(const LatinSquare& square);

// Y(L_1,...,L_d): union of the triangle sets (set semantics).
Complex2 build_Y_union(const std::vector<LatinSquare>& squares);

// Full k-skeleton of the simplex on n vertices, k in {1, 2}.
Complex2 build_simplex_skeleton(int n, int k);

// Full 1-skeleton of the simplex on n vertices plus each triangle
// independently with probability p.
Complex2 build_Y2np(int n, double p, Rng& rng);

// Link of v: graph on the neighbors of v, edge uw iff uvw is a triangle.
// Vertices keep their indices in the ambient complex.
Graph link(const Complex2& complex, int v);

struct DegreeProfile {
    int max = 0;
    std::vector<int> histogram;  // histogram[d] = number of edges of degree d
};

// D_1: maximum number of triangles through a common edge, with histogram.
DegreeProfile edge_degree_profile(const Complex2& complex);

}  // namespace coblab
