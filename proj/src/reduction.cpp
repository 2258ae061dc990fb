#include "confluent/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "confluent/planarity.hpp"

namespace confluent {

namespace {

struct StepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kind_name(StepKind k) {
    switch (k) {
        case StepKind::Clique: return "clique";
        case StepKind::Biclique: return "biclique";
        case StepKind::DirectedBiclique: return "directed_biclique";
    }
    return "?";
}

}  // namespace

std::vector<int> Candidate::all_vertices() const {
    std::vector<int> v;
    if (kind == StepKind::Clique) {
        v = members;
    } else {
        v = side_a;
        v.insert(v.end(), side_b.begin(), side_b.end());
    }
    std::sort(v.begin(), v.end());
    return v;
}

bool Candidate::operator<(const Candidate& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (members != o.members) return members < o.members;
    if (side_a != o.side_a) return side_a < o.side_a;
    return side_b < o.side_b;
}

std::map<int, std::vector<int>> candidate_removed_at(const Candidate& c) {
    std::map<int, std::vector<int>> at;
    if (c.kind == StepKind::Clique) {
        for (int m : c.members)
            for (int o : c.members)
                if (o != m) at[m].push_back(o);
    } else {
        for (int a : c.side_a) at[a] = c.side_b;
        for (int b : c.side_b) at[b] = c.side_a;
    }
    return at;
}

bool candidate_admissible(const TagState& tags, const Candidate& c) {
    for (const auto& [m, gone] : candidate_removed_at(c)) {
        auto it = tags.side.find(m);
        if (it == tags.side.end()) continue;
        int seen = -1;
        for (int r : gone) {
            auto t = it->second.find(r);
            if (t == it->second.end())
                throw std::logic_error("untagged edge at a tagged junction");
            if (seen < 0)
                seen = t->second;
            else if (seen != t->second)
                return false;
        }
    }
    return true;
}

ReductionStep perform_replacement(Graph& g, TagState& tags, const Candidate& c) {
    // Validate shape and presence.
    ReductionStep step;
    step.kind = c.kind;
    if (c.kind == StepKind::Clique) {
        if (g.is_directed()) throw std::invalid_argument("clique replacement on a digraph");
        if (c.members.size() < 4) throw std::invalid_argument("clique candidate below 4 members");
        step.members = c.members;
        std::sort(step.members.begin(), step.members.end());
        for (size_t i = 0; i < step.members.size(); ++i)
            for (size_t j = i + 1; j < step.members.size(); ++j) {
                if (!g.has_edge(step.members[i], step.members[j]))
                    throw std::invalid_argument("clique candidate is not complete");
                step.removed_edges.emplace_back(step.members[i], step.members[j]);
            }
    } else {
        step.side_a = c.side_a;
        step.side_b = c.side_b;
        std::sort(step.side_a.begin(), step.side_a.end());
        std::sort(step.side_b.begin(), step.side_b.end());
        if (step.side_a.size() < 2 || step.side_b.size() < 2)
            throw std::invalid_argument("biclique candidate with a side below 2");
        bool directed = c.kind == StepKind::DirectedBiclique;
        if (directed != g.is_directed())
            throw std::invalid_argument("candidate kind does not match graph directedness");
        for (int a : step.side_a)
            for (int b : step.side_b) {
                if (a == b) throw std::invalid_argument("biclique sides intersect");
                if (!g.has_edge(a, b))
                    throw std::invalid_argument("biclique candidate is not complete");
                step.removed_edges.emplace_back(directed ? Edge{a, b}
                                                         : Edge{std::min(a, b), std::max(a, b)});
            }
    }
    std::sort(step.removed_edges.begin(), step.removed_edges.end());
    if (!candidate_admissible(tags, c))
        throw std::invalid_argument("candidate is not admissible (mixed side tags)");

    // Inherited tags at tagged-junction members, before any edge changes.
    std::map<int, int> inherited;
    for (const auto& [m, gone] : candidate_removed_at(c)) {
        auto it = tags.side.find(m);
        if (it != tags.side.end()) inherited[m] = it->second.at(gone.front());
    }

    for (auto [u, v] : step.removed_edges) {
        g.remove_edge(u, v);
        if (auto it = tags.side.find(u); it != tags.side.end()) it->second.erase(v);
        if (auto it = tags.side.find(v); it != tags.side.end()) it->second.erase(u);
    }
    int j = g.add_vertex();
    step.junction_id = j;
    if (c.kind == StepKind::DirectedBiclique) {
        for (int a : step.side_a) g.add_edge(a, j);
        for (int b : step.side_b) g.add_edge(j, b);
    } else {
        for (int m : c.all_vertices()) g.add_edge(m, j);
    }
    if (c.kind == StepKind::Biclique) {
        auto& table = tags.side[j];
        for (int a : step.side_a) table[a] = 0;
        for (int b : step.side_b) table[b] = 1;
    }
    for (auto [m, side] : inherited) tags.side[m][j] = side;
    return step;
}

Graph replay(const Graph& original, const std::vector<ReductionStep>& steps, TagState* tags_out) {
    Graph g = original;
    TagState tags;
    for (const auto& s : steps) {
        Candidate c{s.kind, s.members, s.side_a, s.side_b};
        ReductionStep done = perform_replacement(g, tags, c);
        if (done.junction_id != s.junction_id)
            throw StepError("replay: junction id mismatch");
        if (done.removed_edges != s.removed_edges)
            throw StepError("replay: removed-edge set mismatch");
    }
    if (tags_out) *tags_out = tags;
    return g;
}

namespace {

bool clique_still_valid(const Graph& g, const std::vector<int>& members) {
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (!g.has_edge(members[i], members[j])) return false;
    return true;
}

std::vector<Edge> junction_edges(const ReductionStep& s) {
    std::vector<Edge> es;
    if (s.kind == StepKind::Clique) {
        for (int m : s.members) es.emplace_back(m, s.junction_id);
    } else if (s.kind == StepKind::Biclique) {
        for (int a : s.side_a) es.emplace_back(a, s.junction_id);
        for (int b : s.side_b) es.emplace_back(b, s.junction_id);
    } else {
        for (int a : s.side_a) es.emplace_back(a, s.junction_id);
        for (int b : s.side_b) es.emplace_back(s.junction_id, b);
    }
    return es;
}

}  // namespace

ReductionResult reduce_undirected(const Graph& g) {
    if (g.is_directed()) throw std::invalid_argument("reduce_undirected: undirected input required");
    ReductionResult r;
    r.original = g;
    Graph cur = g;
    TagState tags;

    auto cliques = list_max_cliques(g, 4);
    std::vector<bool> clique_dead(cliques.size(), false);
    bool use_index = degeneracy(g) <= 8;
    std::optional<BicliqueIndex> index;
    if (use_index) index = build_index(g);

    while (!is_planar(cur)) {
        std::optional<Candidate> chosen;
        for (size_t i = 0; i < cliques.size() && !chosen; ++i) {
            if (clique_dead[i]) continue;
            if (clique_still_valid(cur, cliques[i])) {
                Candidate c;
                c.kind = StepKind::Clique;
                c.members = cliques[i];
                chosen = c;
                clique_dead[i] = true;
            }
        }
        if (!chosen) {
            std::vector<Biclique> bics =
                use_index ? index->retrievable() : list_max_bicliques(cur);
            for (const auto& bc : bics) {
                Candidate c;
                c.kind = StepKind::Biclique;
                c.side_a = bc.side_a;
                c.side_b = bc.side_b;
                if (candidate_admissible(tags, c)) {
                    chosen = c;
                    break;
                }
            }
        }
        if (!chosen) {
            r.reduced = cur;
            r.status = ReductionStatus::Failed;
            return r;
        }
        ReductionStep step = perform_replacement(cur, tags, *chosen);
        if (use_index)
            index->apply_replacement(step.removed_edges, step.junction_id, junction_edges(step));
        r.steps.push_back(std::move(step));
    }
    r.reduced = cur;
    r.status = ReductionStatus::Planar;
    return r;
}

ReductionResult reduce_directed(const Graph& d) {
    if (!d.is_directed()) throw std::invalid_argument("reduce_directed: directed input required");
    ReductionResult r;
    r.original = d;
    Graph cur = d;
    TagState tags;
    while (!is_planar(cur)) {
        auto cands = directed_bicliques(cur);
        if (cands.empty()) {
            r.reduced = cur;
            r.status = ReductionStatus::Failed;
            return r;
        }
        const auto& bc = cands.front();
        Candidate c;
        c.kind = StepKind::DirectedBiclique;
        c.side_a = bc.side_a;
        c.side_b = bc.side_b;
        r.steps.push_back(perform_replacement(cur, tags, c));
    }
    r.reduced = cur;
    r.status = ReductionStatus::Planar;
    return r;
}

Graph expand(const ReductionResult& r) {
    Graph cur = r.reduced;
    for (int i = static_cast<int>(r.steps.size()) - 1; i >= 0; --i) {
        const ReductionStep& s = r.steps[i];
        auto bad = [&](const std::string& what) {
            throw StepError("expand: inconsistent log at step " + std::to_string(i) + ": " + what);
        };
        if (s.junction_id != cur.vertex_count() - 1) bad("junction is not the last vertex");
        std::vector<Edge> expect = junction_edges(s);
        std::vector<Edge> norm;
        for (auto [u, v] : expect)
            norm.emplace_back(cur.is_directed() ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)});
        std::sort(norm.begin(), norm.end());
        std::vector<Edge> actual;
        for (auto e : cur.edges())
            if (e.first == s.junction_id || e.second == s.junction_id) actual.push_back(e);
        if (actual != norm) bad("junction incidence does not match the step");
        for (auto [u, v] : actual) cur.remove_edge(u, v);
        cur.pop_isolated_vertex();
        for (auto [u, v] : s.removed_edges) {
            if (cur.has_edge(u, v)) bad("restored edge already present");
            if (u >= cur.vertex_count() || v >= cur.vertex_count()) bad("restored edge out of range");
            cur.add_edge(u, v);
        }
    }
    if (cur != r.original) throw StepError("expand: result does not match the original graph");
    return cur;
}

std::string reduction_log_json(const ReductionResult& r) {
    nlohmann::json j;
    j["original"] = serialize_graph(r.original);
    j["reduced"] = serialize_graph(r.reduced);
    j["status"] = r.status == ReductionStatus::Planar ? "planar" : "failed";
    j["steps"] = nlohmann::json::array();
    for (const auto& s : r.steps) {
        nlohmann::json js;
        js["kind"] = kind_name(s.kind);
        if (s.kind == StepKind::Clique) {
            js["members"] = s.members;
        } else {
            js["sides"] = {{"a", s.side_a}, {"b", s.side_b}};
        }
        js["junction"] = s.junction_id;
        js["removed"] = nlohmann::json::array();
        for (auto [u, v] : s.removed_edges) js["removed"].push_back({u, v});
        j["steps"].push_back(std::move(js));
    }
    return j.dump(2);
}

}  // namespace confluent
