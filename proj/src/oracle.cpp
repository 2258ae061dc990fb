#include "confluent/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "confluent/canonical.hpp"
#include "confluent/enumeration.hpp"
#include "confluent/planarity.hpp"

namespace confluent {

namespace {

void subsets_of_size_ge(const std::vector<int>& base, int min_size,
                        const std::function<void(std::vector<int>&)>& fn) {
    int k = static_cast<int>(base.size());
    if (k > 20) throw std::invalid_argument("candidate side too large to enumerate");
    std::vector<int> cur;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) < min_size) continue;
        cur.clear();
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) cur.push_back(base[i]);
        fn(cur);
    }
}

}  // namespace

std::vector<Candidate> merge_candidates(const Graph& g) {
    if (g.is_directed()) throw std::invalid_argument("merge_candidates: undirected input required");
    std::set<Candidate> dedup;
    for (const auto& mc : list_max_cliques(g, 4))
        subsets_of_size_ge(mc, 4, [&](std::vector<int>& sub) {
            Candidate c;
            c.kind = StepKind::Clique;
            c.members = sub;
            dedup.insert(std::move(c));
        });
    for (const auto& mb : list_max_bicliques(g))
        subsets_of_size_ge(mb.side_a, 2, [&](std::vector<int>& a) {
            std::vector<int> a_copy = a;
            subsets_of_size_ge(mb.side_b, 2, [&](std::vector<int>& b) {
                Biclique canon = make_biclique(a_copy, b);
                Candidate c;
                c.kind = StepKind::Biclique;
                c.side_a = canon.side_a;
                c.side_b = canon.side_b;
                dedup.insert(std::move(c));
            });
        });
    std::vector<Candidate> result(dedup.begin(), dedup.end());
    std::sort(result.begin(), result.end(), [](const Candidate& x, const Candidate& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });
    return result;
}

namespace {

struct SearchState {
    Graph g;
    TagState tags;
    std::set<int> clique_junctions;
};

// Gadget encoding for canonical labeling: terminals keep one vertex, clique
// junctions one colored vertex, biclique junctions a middle vertex plus two
// side ports, so that swapping a junction's sides is an ordinary graph
// automorphism and canonical labeling collapses it.
ColoredGraph to_gadget(const SearchState& st) {
    int n = st.g.vertex_count();
    std::vector<int> rep(n, -1), port_a(n, -1), port_b(n, -1);
    int total = 0;
    for (int v = 0; v < n; ++v) {
        if (st.tags.tagged(v)) {
            rep[v] = total;  // middle vertex
            port_a[v] = total + 1;
            port_b[v] = total + 2;
            total += 3;
        } else {
            rep[v] = total++;
        }
    }
    ColoredGraph cg(total);
    for (int v = 0; v < n; ++v) {
        if (st.tags.tagged(v)) {
            cg.color[rep[v]] = 3;
            cg.color[port_a[v]] = 2;
            cg.color[port_b[v]] = 2;
            cg.add_edge(rep[v], port_a[v]);
            cg.add_edge(rep[v], port_b[v]);
        } else {
            cg.color[rep[v]] = st.clique_junctions.count(v) ? 1 : 0;
        }
    }
    auto attach = [&](int v, int other) {
        // Where an edge toward `other` lands on v's gadget.
        if (!st.tags.tagged(v)) return rep[v];
        int side = st.tags.side.at(v).at(other);
        return side == 0 ? port_a[v] : port_b[v];
    };
    for (auto [u, v] : st.g.edges()) cg.add_edge(attach(u, v), attach(v, u));
    return cg;
}

struct Searcher {
    const OracleBudget& budget;
    OracleStats stats;
    bool hit_node_budget = false;
    bool hit_depth_budget = false;
    std::unordered_set<std::string> not_reducible;

    explicit Searcher(const OracleBudget& b) : budget(b) {}

    enum class Sub { Found, Exhausted, Cutoff };

    Sub dfs(const SearchState& st, int depth, std::vector<ReductionStep>& steps) {
        if (is_planar(st.g)) return Sub::Found;

        std::string cert;
        if (budget.memoize) {
            cert = canonical_form(to_gadget(st)).certificate;
            if (not_reducible.count(cert)) {
                ++stats.memo_hits;
                return Sub::Exhausted;
            }
        }
        if (depth >= budget.max_depth) {
            hit_depth_budget = true;
            return Sub::Cutoff;
        }
        if (stats.states_explored >= budget.max_states) {
            hit_node_budget = true;
            return Sub::Cutoff;
        }
        ++stats.states_explored;

        bool any_cutoff = false;
        for (const Candidate& c : merge_candidates(st.g)) {
            if (!candidate_admissible(st.tags, c)) continue;
            SearchState child = st;
            ReductionStep step = perform_replacement(child.g, child.tags, c);
            if (c.kind == StepKind::Clique) child.clique_junctions.insert(step.junction_id);
            steps.push_back(std::move(step));
            Sub r = dfs(child, depth + 1, steps);
            if (r == Sub::Found) return Sub::Found;
            steps.pop_back();
            if (r == Sub::Cutoff) any_cutoff = true;
        }
        if (any_cutoff) return Sub::Cutoff;  // never memoized
        if (budget.memoize) not_reducible.insert(std::move(cert));
        return Sub::Exhausted;
    }
};

}  // namespace

OracleVerdict decide_confluence(const Graph& g, const OracleBudget& budget) {
    if (g.is_directed())
        throw std::invalid_argument("decide_confluence: undirected input required");
    if (g.vertex_count() > budget.vertex_cap)
        throw std::invalid_argument("decide_confluence: graph has " +
                                    std::to_string(g.vertex_count()) +
                                    " vertices, above the cap of " +
                                    std::to_string(budget.vertex_cap));
    Searcher s(budget);
    SearchState root{g, TagState{}, {}};
    OracleVerdict verdict;
    std::vector<ReductionStep> steps;
    Searcher::Sub r = s.dfs(root, 0, steps);
    verdict.stats = s.stats;
    switch (r) {
        case Searcher::Sub::Found:
            verdict.outcome = OracleOutcome::Reducible;
            verdict.witness = std::move(steps);
            break;
        case Searcher::Sub::Exhausted:
            verdict.outcome = OracleOutcome::NotReducible;
            break;
        case Searcher::Sub::Cutoff:
            verdict.outcome = OracleOutcome::Inconclusive;
            verdict.reason = s.hit_node_budget ? "node-budget" : "depth-budget";
            break;
    }
    return verdict;
}

}  // namespace confluent
