#pragma once

#include "webdimer/core.hpp"

#include "json.hpp"
#include <string>
#include <vector>

namespace wd {

// Vertex codes: internal vertices are 0..V-1, boundary vertex i is -i.
struct WEdge {
    int u = 0, v = 0;
    int mult = 1;
};

// Bicolored disk graph with a rotation system. Shared by plabic graphs,
// webs and tensor diagrams.
struct Web {
    int r = 1;
    int n = 0;
    std::vector<char> white;             // per internal vertex
    std::vector<WEdge> edges;
    std::vector<std::vector<int>> rot;   // internal vertex -> incident edges, CCW
    std::vector<std::vector<int>> bnd;   // boundary i at bnd[i-1]; CCW = clockwise order of unclasped copies
    bool planar = true;

    int nv() const { return int(white.size()); }
    int ne() const { return int(edges.size()); }
    int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
    const std::vector<int>& around(int v) const { return v >= 0 ? rot[v] : bnd[-v - 1]; }
    bool is_white(int v) const { return v >= 0 && white[v]; }

    int add_vertex(bool is_white);
    // Appends an edge; callers maintain rotation order themselves.
    int add_edge(int u, int v, int mult = 1);

    std::vector<int> degree() const;  // lambda
    bool standard() const;
    bool semistandard() const;
    bool dual_semistandard() const;

    // Structural checks; `sums` also requires every internal multiplicity sum == r.
    void validate(bool sums) const;
};

// Faces of the rotation system with virtual boundary arcs i -> i+1 added.
// Darts: 2e is u->v, 2e+1 is v->u; arcs use edge ids ne()..ne()+n-1.
struct Faces {
    std::vector<std::vector<int>> cycles;  // darts, face on the left
    std::vector<int> face_of_dart;
    int outer = -1;
    std::vector<char> touches_boundary;    // contains a virtual arc
    int components = 0;                    // of the graph plus boundary circle
};

Faces compute_faces(const Web& w);
int dart_tail(const Web& w, int d);
int dart_head(const Web& w, int d);

// Euler check of the rotation system in the disk.
bool embedding_is_planar(const Web& w);

// Remove isolated internal vertices and renumber.
Web compact(const Web& w);

// Merge adjacent 2-valent vertices (multiplicities m and r-m) pairwise.
Web suppress_bivalent_pairs(const Web& w);

// Deterministic serialization up to boundary-anchored isomorphism.
std::string canonical_key(const Web& w);

nlohmann::json web_to_json(const Web& w, bool with_mult = true);
Web web_from_json(const nlohmann::json& j, int default_r = 1);

}  // namespace wd
