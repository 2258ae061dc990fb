#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace confluent {

// Small vertex-colored simple graph for canonical labeling.
struct ColoredGraph {
    int n = 0;
    std::vector<int> color;
    std::vector<std::vector<uint64_t>> adj;  // bitset rows

    explicit ColoredGraph(int vertices = 0) { resize(vertices); }
    void resize(int vertices) {
        n = vertices;
        color.assign(n, 0);
        adj.assign(n, std::vector<uint64_t>((n + 63) / 64, 0));
    }
    void add_edge(int u, int v) {
        adj[u][v >> 6] |= 1ull << (v & 63);
        adj[v][u >> 6] |= 1ull << (u & 63);
    }
    bool has_edge(int u, int v) const { return (adj[u][v >> 6] >> (v & 63)) & 1; }
};

struct CanonicalForm {
    std::string certificate;        // equal iff the colored graphs are isomorphic
    std::vector<int> to_canonical;  // vertex -> canonical position
};

// Individualization-refinement canonical labeling: refine to an equitable
// partition, branch on the first non-singleton cell, take the minimum leaf
// certificate (colors in canonical order plus the permuted adjacency bits).
CanonicalForm canonical_form(const ColoredGraph& g);

}  // namespace confluent
