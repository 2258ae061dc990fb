#include "confluent/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace confluent {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Common neighbors of every vertex in `T` (T nonempty, sorted lists).
std::vector<int> common_neighbors(const Graph& g, const std::vector<int>& T) {
    std::vector<int> common = g.neighbors(T[0]);
    for (size_t i = 1; i < T.size() && !common.empty(); ++i)
        common = sorted_intersection(common, g.neighbors(T[i]));
    return common;
}

void for_each_subset_ge2(const std::vector<int>& base,
                         const std::function<void(const std::vector<int>&)>& fn) {
    int k = static_cast<int>(base.size());
    if (k > 24) throw std::invalid_argument("out-neighborhood too large for tuple enumeration");
    std::vector<int> subset;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        subset.clear();
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) subset.push_back(base[i]);
        fn(subset);
    }
}

}  // namespace

Orientation orient(const Graph& g) {
    if (g.is_directed()) throw std::invalid_argument("orient: undirected input required");
    int n = g.vertex_count();
    Orientation o;
    o.order.reserve(n);
    o.pos.assign(n, -1);
    o.out.assign(n, {});

    // Min-degree peeling with a bucket queue; ties go to the smallest id.
    std::vector<int> deg(n);
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(g.neighbors(v).size());
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<std::set<int>> buckets(maxdeg + 1);
    for (int v = 0; v < n; ++v) buckets[deg[v]].insert(v);
    std::vector<bool> removed(n, false);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int lvl = 0;
        while (buckets[lvl].empty()) ++lvl;
        int v = *buckets[lvl].begin();
        buckets[lvl].erase(buckets[lvl].begin());
        d = std::max(d, lvl);
        removed[v] = true;
        o.pos[v] = step;
        o.order.push_back(v);
        for (int w : g.neighbors(v))
            if (!removed[w]) {
                buckets[deg[w]].erase(w);
                buckets[--deg[w]].insert(w);
            }
    }
    o.d = d;
    for (auto [u, v] : g.edges()) {
        if (o.pos[u] < o.pos[v])
            o.out[u].push_back(v);
        else
            o.out[v].push_back(u);
    }
    for (auto& lst : o.out) std::sort(lst.begin(), lst.end());
    return o;
}

int degeneracy(const Graph& g) { return orient(g.underlying_undirected()).d; }

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        out.push_back(R);
        return;
    }
    // Pivot: vertex of P ∪ X with most neighbors in P.
    int pivot = -1, best = -1;
    for (int cand : P) {
        int c = static_cast<int>(sorted_intersection(g.neighbors(cand), P).size());
        if (c > best) best = c, pivot = cand;
    }
    for (int cand : X) {
        int c = static_cast<int>(sorted_intersection(g.neighbors(cand), P).size());
        if (c > best) best = c, pivot = cand;
    }
    std::vector<int> expand;
    std::set_difference(P.begin(), P.end(), g.neighbors(pivot).begin(), g.neighbors(pivot).end(),
                        std::back_inserter(expand));
    for (int v : expand) {
        R.push_back(v);
        bron_kerbosch(g, R, sorted_intersection(P, g.neighbors(v)),
                      sorted_intersection(X, g.neighbors(v)), out);
        R.pop_back();
        P.erase(std::lower_bound(P.begin(), P.end(), v));
        X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
}

}  // namespace

std::vector<std::vector<int>> list_max_cliques(const Graph& g, int min_size) {
    if (g.is_directed()) throw std::invalid_argument("list_max_cliques: undirected input required");
    std::vector<int> R, P(g.vertex_count()), X;
    for (int v = 0; v < g.vertex_count(); ++v) P[v] = v;
    std::vector<std::vector<int>> cliques;
    bron_kerbosch(g, R, std::move(P), std::move(X), cliques);
    std::vector<std::vector<int>> result;
    for (auto& c : cliques) {
        if (static_cast<int>(c.size()) < min_size) continue;
        std::sort(c.begin(), c.end());
        result.push_back(std::move(c));
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return result;
}

Biclique make_biclique(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b < a) std::swap(a, b);
    return Biclique{std::move(a), std::move(b)};
}

std::vector<Biclique> list_max_bicliques(const Graph& g) {
    if (g.is_directed())
        throw std::invalid_argument("list_max_bicliques: undirected input required");
    Orientation o = orient(g);
    std::set<Biclique> found;
    std::set<std::vector<int>> seen_tuples;
    for (int w = 0; w < g.vertex_count(); ++w) {
        for_each_subset_ge2(o.out[w], [&](const std::vector<int>& T) {
            if (!seen_tuples.insert(T).second) return;
            std::vector<int> side = common_neighbors(g, T);
            if (side.size() < 2) return;
            // Maximal iff the tuple is exactly the common neighborhood of
            // its own side.
            if (common_neighbors(g, side) != T) return;
            found.insert(make_biclique(side, T));
        });
    }
    std::vector<Biclique> result(found.begin(), found.end());
    std::sort(result.begin(), result.end(), [](const Biclique& a, const Biclique& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return result;
}

std::vector<DirectedBiclique> directed_bicliques(const Graph& d) {
    if (!d.is_directed()) throw std::invalid_argument("directed_bicliques: directed input required");
    Graph und = d.underlying_undirected();
    std::set<DirectedBiclique> found;
    for (const Biclique& bc : list_max_bicliques(und)) {
        // Larger side; ties go to the side holding the smallest vertex id.
        std::vector<int> large = bc.side_a, small = bc.side_b;
        if (large.size() < small.size()) std::swap(large, small);
        if (large.size() == small.size() && small[0] < large[0]) std::swap(large, small);

        // Group the larger side by its exact arc-direction vector.
        enum class Dir : char { Out, In, Both };
        std::map<std::vector<Dir>, std::vector<int>> groups;
        for (int l : large) {
            std::vector<Dir> pattern;
            pattern.reserve(small.size());
            for (int s : small) {
                bool fwd = d.has_edge(l, s), rev = d.has_edge(s, l);
                pattern.push_back(fwd && rev ? Dir::Both : (fwd ? Dir::Out : Dir::In));
            }
            groups[pattern].push_back(l);
        }
        for (const auto& [pattern, members] : groups) {
            if (members.size() < 2) continue;
            std::vector<int> to_small, from_small;
            for (size_t i = 0; i < small.size(); ++i) {
                if (pattern[i] != Dir::In) to_small.push_back(small[i]);
                if (pattern[i] != Dir::Out) from_small.push_back(small[i]);
            }
            if (to_small.size() >= 2)
                found.insert(DirectedBiclique{members, to_small});
            if (from_small.size() >= 2)
                found.insert(DirectedBiclique{from_small, members});
        }
    }
    std::vector<DirectedBiclique> result(found.begin(), found.end());
    std::sort(result.begin(), result.end(), [](const DirectedBiclique& a, const DirectedBiclique& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return result;
}

BicliqueIndex BicliqueIndex::build(const Graph& g) {
    if (g.is_directed()) throw std::invalid_argument("build_index: undirected input required");
    BicliqueIndex idx;
    idx.g_ = g;
    Orientation o = orient(g);
    idx.d_ = o.d;
    idx.order_ = o.order;
    idx.pos_ = o.pos;
    idx.out_ = o.out;
    for (int w = 0; w < g.vertex_count(); ++w) idx.insert_creator(w);
    std::vector<TupleKey> keys;
    for (const auto& [key, entry] : idx.tuples_) keys.push_back(key);
    for (const auto& key : keys) idx.refresh_tuple(key);
    return idx;
}

bool BicliqueIndex::arc_from(int u, int v) const {
    if (!g_.has_edge(u, v)) throw std::invalid_argument("arc_from: edge not present");
    return pos_[u] < pos_[v];
}

void BicliqueIndex::insert_creator(int w) {
    for_each_subset_ge2(out_[w], [&](const std::vector<int>& T) {
        auto& entry = tuples_[T];
        entry.creators.insert(w);
        if (entry.creators.size() == 1)
            for (int t : T) member_of_[t].insert(T);
    });
}

void BicliqueIndex::retract_creator(int w, const std::vector<int>& old_out) {
    for_each_subset_ge2(old_out, [&](const std::vector<int>& T) {
        auto it = tuples_.find(T);
        if (it == tuples_.end()) return;
        it->second.creators.erase(w);
    });
}

void BicliqueIndex::unregister_biclique(const TupleKey& key) {
    auto it = tuple_biclique_.find(key);
    if (it == tuple_biclique_.end()) return;
    const Biclique& bc = it->second;
    auto src = biclique_sources_.find(bc);
    src->second.erase(key);
    if (src->second.empty()) {
        buckets_[bc.size()].erase(bc);
        if (buckets_[bc.size()].empty()) buckets_.erase(bc.size());
        biclique_sources_.erase(src);
    }
    tuple_biclique_.erase(it);
}

void BicliqueIndex::register_biclique(const TupleKey& key) {
    const TupleEntry& entry = tuples_.at(key);
    Biclique bc = make_biclique(entry.side, key);
    tuple_biclique_[key] = bc;
    biclique_sources_[bc].insert(key);
    buckets_[bc.size()].insert(bc);
}

// Recomputes side list and maximality for one tuple; drops it entirely when
// its creator set became empty.
void BicliqueIndex::refresh_tuple(const TupleKey& key) {
    auto it = tuples_.find(key);
    if (it == tuples_.end()) return;
    unregister_biclique(key);
    for (int s : it->second.side) {
        auto m = side_of_.find(s);
        if (m != side_of_.end()) m->second.erase(key);
    }
    if (it->second.creators.empty()) {
        for (int t : key) member_of_[t].erase(key);
        tuples_.erase(it);
        return;
    }
    it->second.side = common_neighbors(g_, key);
    for (int s : it->second.side) side_of_[s].insert(key);
    it->second.maximal =
        it->second.side.size() >= 2 && common_neighbors(g_, it->second.side) == key;
    if (it->second.maximal) register_biclique(key);
}

void BicliqueIndex::apply_replacement(const std::vector<Edge>& removed, int new_vertex,
                                      const std::vector<Edge>& added) {
    // Validate liveness.
    if (new_vertex != g_.vertex_count())
        throw std::invalid_argument("apply_replacement: new_vertex must be the next fresh id");
    std::set<int> members;
    for (auto [u, v] : removed) {
        if (!g_.has_edge(u, v))
            throw std::invalid_argument("apply_replacement: removed edge not present");
        members.insert(u);
        members.insert(v);
    }
    for (auto [u, v] : added) {
        int other = (u == new_vertex) ? v : (v == new_vertex ? u : -1);
        if (other < 0 || other >= g_.vertex_count())
            throw std::invalid_argument("apply_replacement: added edge must join a live vertex to the new one");
        members.insert(other);
    }

    // Affected tuples: any whose members, creators, or side touch the
    // changed vertices.
    std::set<TupleKey> affected;
    for (int x : members) {
        auto m = member_of_.find(x);
        if (m != member_of_.end()) affected.insert(m->second.begin(), m->second.end());
        auto s = side_of_.find(x);
        if (s != side_of_.end()) affected.insert(s->second.begin(), s->second.end());
    }

    std::map<int, std::vector<int>> old_out;
    for (int x : members) old_out[x] = out_[x];
    for (int x : members)
        for_each_subset_ge2(old_out[x], [&](const std::vector<int>& T) {
            if (tuples_.count(T)) affected.insert(T);
        });
    for (int x : members) retract_creator(x, old_out[x]);

    // Sinks of the replaced subgraph: members with no outgoing removed edge.
    std::set<int> non_sinks;
    for (auto [u, v] : removed) non_sinks.insert(pos_[u] < pos_[v] ? u : v);
    std::vector<int> sinks;
    for (int x : members)
        if (!non_sinks.count(x)) sinks.push_back(x);

    // Graph edit.
    for (auto [u, v] : removed) g_.remove_edge(u, v);
    int created = g_.add_vertex();
    assert(created == new_vertex);
    for (auto [u, v] : added) g_.add_edge(u, v);

    // Orientation: drop removed arcs, insert the new vertex after the last
    // non-sink and before every sink, then add the junction arcs.
    for (auto [u, v] : removed) {
        int from = pos_[u] < pos_[v] ? u : v;
        int to = from == u ? v : u;
        auto& lst = out_[from];
        lst.erase(std::lower_bound(lst.begin(), lst.end(), to));
    }
    int insert_at = 0;
    for (int x : non_sinks) insert_at = std::max(insert_at, pos_[x] + 1);
    if (non_sinks.empty())
        for (int x : members) insert_at = std::max(insert_at, pos_[x] + 1);
    for (int x : sinks)
        if (pos_[x] < insert_at)
            throw std::invalid_argument("apply_replacement: edit is not a valid replacement");
    order_.insert(order_.begin() + insert_at, new_vertex);
    pos_.assign(order_.size(), -1);
    for (size_t i = 0; i < order_.size(); ++i) pos_[order_[i]] = static_cast<int>(i);
    out_.emplace_back();
    for (int x : non_sinks) {
        auto& lst = out_[x];
        lst.insert(std::lower_bound(lst.begin(), lst.end(), new_vertex), new_vertex);
    }
    out_[new_vertex] = sinks;
    std::sort(out_[new_vertex].begin(), out_[new_vertex].end());
    if (static_cast<int>(out_[new_vertex].size()) > d_)
        throw std::invalid_argument("apply_replacement: edit violates the outdegree bound");

    // Re-add creators over the new out-neighborhoods and refresh everything
    // the edit could have touched.
    for (int x : members) insert_creator(x);
    insert_creator(new_vertex);
    for (int x : members)
        for_each_subset_ge2(out_[x], [&](const std::vector<int>& T) { affected.insert(T); });
    for_each_subset_ge2(out_[new_vertex],
                        [&](const std::vector<int>& T) { affected.insert(T); });
    for (const auto& key : affected) refresh_tuple(key);
}

std::vector<Biclique> BicliqueIndex::retrievable() const {
    std::vector<Biclique> result;
    for (const auto& [size, set] : buckets_)
        for (const auto& bc : set) result.push_back(bc);
    return result;
}

std::optional<Biclique> BicliqueIndex::largest() const {
    if (buckets_.empty()) return std::nullopt;
    return *buckets_.begin()->second.begin();
}

BicliqueIndex build_index(const Graph& g) { return BicliqueIndex::build(g); }

void apply_replacement(BicliqueIndex& index, const std::vector<Edge>& removed, int new_vertex,
                       const std::vector<Edge>& added) {
    index.apply_replacement(removed, new_vertex, added);
}

}  // namespace confluent
