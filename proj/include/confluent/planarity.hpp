#pragma once

#include <string>
#include <vector>

#include "confluent/graph.hpp"

namespace confluent {

// Combinatorial embedding: per-vertex cyclic neighbor order plus the derived
// face walks (as dart sequences). Every dart (u,v) lies on exactly one walk
// and V - E + F = 2 holds per connected component.
struct Embedding {
    std::vector<std::vector<int>> rotation;     // neighbor order per vertex
    std::vector<std::vector<Edge>> faces;       // dart walks
    int outer_face = -1;                        // largest face, ties by id
};

struct NonPlanarError : std::runtime_error {
    explicit NonPlanarError(std::vector<Edge> witness_edges)
        : std::runtime_error("graph is not planar"), witness(std::move(witness_edges)) {}
    // Best-effort Kuratowski-style subgraph; may be empty.
    std::vector<Edge> witness;
};

// Directed inputs are tested on the underlying undirected graph.
bool is_planar(const Graph& g);

// Throws NonPlanarError (with a witness when available) on non-planar input.
Embedding embed(const Graph& g);

int face_count(const Embedding& e);

}  // namespace confluent
