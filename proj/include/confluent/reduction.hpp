#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confluent/enumeration.hpp"
#include "confluent/graph.hpp"

namespace confluent {

enum class StepKind { Clique, Biclique, DirectedBiclique };

// A clique/biclique chosen for replacement. Clique candidates use `members`;
// biclique kinds use the sides (side_a -> side_b for the directed kind).
struct Candidate {
    StepKind kind = StepKind::Clique;
    std::vector<int> members;
    std::vector<int> side_a;
    std::vector<int> side_b;

    int size() const {
        return kind == StepKind::Clique
                   ? static_cast<int>(members.size())
                   : static_cast<int>(side_a.size() + side_b.size());
    }
    std::vector<int> all_vertices() const;
    bool operator<(const Candidate& o) const;
    bool operator==(const Candidate& o) const {
        return kind == o.kind && members == o.members && side_a == o.side_a && side_b == o.side_b;
    }
};

struct ReductionStep {
    StepKind kind = StepKind::Clique;
    std::vector<int> members;  // Clique
    std::vector<int> side_a;   // Biclique / DirectedBiclique
    std::vector<int> side_b;
    int junction_id = -1;
    std::vector<Edge> removed_edges;
};

enum class ReductionStatus { Planar, Failed };

struct ReductionResult {
    Graph original;
    std::vector<ReductionStep> steps;
    Graph reduced;
    ReductionStatus status = ReductionStatus::Failed;
};

// Side bookkeeping for undirected biclique junctions: side[j][neighbor] is 0
// for side A and 1 for side B. Every incident edge of a tagged junction has
// an entry; directed junctions need none (arc directions disambiguate).
struct TagState {
    std::map<int, std::map<int, int>> side;

    bool tagged(int v) const { return side.count(v) != 0; }
};

// The edges a candidate removes, grouped per member vertex.
std::map<int, std::vector<int>> candidate_removed_at(const Candidate& c);

// A candidate is admissible when, at every member that is a tagged biclique
// junction, the edges it removes carry one uniform side tag. Otherwise the
// junction edge to the new vertex would have to sit on both sides of that
// member's table at once.
bool candidate_admissible(const TagState& tags, const Candidate& c);

// Replaces the candidate in place: removes its internal edges, appends a
// fresh junction vertex, connects every member to it (arcs side_a -> j ->
// side_b for the directed kind), and maintains side tags. Validates that the
// candidate is fully present and admissible.
ReductionStep perform_replacement(Graph& g, TagState& tags, const Candidate& c);

// Forward-replays a step log from `original`; also rebuilds tags.
Graph replay(const Graph& original, const std::vector<ReductionStep>& steps,
             TagState* tags_out = nullptr);

// HeuristicDrawUndirected engine: while the working graph is non-planar,
// replace the largest still-valid maximal clique (>= 4 members), else the
// largest maximal biclique (both sides >= 2); Failed when no candidate is
// left. Cliques are listed once up front; bicliques track the evolving
// graph (via BicliqueIndex when the degeneracy is small).
ReductionResult reduce_undirected(const Graph& g);

// Directed variant: candidates are directed bicliques only.
ReductionResult reduce_directed(const Graph& d);

// Reverse-replays the log: deletes each junction and restores the removed
// edges; the result equals r.original. Throws on an inconsistent log,
// identifying the first bad step.
Graph expand(const ReductionResult& r);

std::string reduction_log_json(const ReductionResult& r);

}  // namespace confluent
