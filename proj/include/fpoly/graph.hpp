#pragma once

#include <string>
#include <vector>

#include "fpoly/poly.hpp"

namespace fpoly {

struct Edge {
    int u = 0;      // endpoints, 1-based, u != v
    int v = 0;
    EdgeVar var = 0;  // variable id = position in the edge list
    std::string name; // display name for polynomial output
};

// Undirected multigraph with an ordered list of marked vertices.
// Parallel edges are allowed (each keeps its own variable); self-loops are
// rejected at construction.
struct MarkedGraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> marked;  // distinct vertex ids, the order fixes v_1..v_m

    int m() const { return static_cast<int>(marked.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    // throws SchemaError on violated invariants
    void validate() const;

    std::vector<std::string> var_names() const;

    // K_n with one edge per unordered vertex pair, in lexicographic order,
    // named e12, e13, ...
    static MarkedGraph complete(int n, std::vector<int> marked);

    // Vertices permuted so the marked vertices become 1..m (in their marked
    // order) and the rest fill m+1..n by ascending original id. Edge
    // variables and names are untouched, so every forest polynomial is
    // unchanged.
    MarkedGraph normalized() const;

    std::string to_json() const;
    static MarkedGraph from_json(const std::string& text);
};

// Seeded connected graph: a random spanning tree plus random extra edges
// (parallel edges allowed). Marked vertices are 1..m.
class Rng;
MarkedGraph random_connected_graph(Rng& rng, int n, int m, int extra_edges);

}  // namespace fpoly
