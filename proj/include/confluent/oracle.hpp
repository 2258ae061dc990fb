#pragma once

#include <string>
#include <vector>

#include "confluent/graph.hpp"
#include "confluent/reduction.hpp"

namespace confluent {

struct OracleBudget {
    long long max_states = 1'000'000;
    int max_depth = 12;
    int vertex_cap = 16;  // input size refusal threshold
    bool memoize = true;  // verdict-preserving; changes stats only
};

struct OracleStats {
    long long states_explored = 0;
    long long memo_hits = 0;
};

enum class OracleOutcome { Reducible, NotReducible, Inconclusive };

struct OracleVerdict {
    OracleOutcome outcome = OracleOutcome::Inconclusive;
    std::vector<ReductionStep> witness;  // Reducible only
    std::string reason;                  // Inconclusive: "node-budget" or "depth-budget"
    OracleStats stats;
};

// Every clique of >= 4 vertices and every complete bipartite subgraph with
// both sides >= 2 (maximal or not, down to 2x2), deduplicated and sorted by
// size descending with lexicographic ties.
std::vector<Candidate> merge_candidates(const Graph& g);

// Exhaustive depth-first search over admissible replacement sequences:
// planarity is the accept test, states are memoized by a canonical labeling
// of the junction-typed graph, and budget exhaustion yields Inconclusive
// (never silently NotReducible).
OracleVerdict decide_confluence(const Graph& g, const OracleBudget& budget = {});

}  // namespace confluent
