#pragma once

// Test-only brute-force oracles and graph generators, independent of the
// library's implementation paths.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "confluent/enumeration.hpp"
#include "confluent/graph.hpp"

namespace testsupport {

using confluent::Biclique;
using confluent::Edge;
using confluent::Graph;

// ---- planarity (Kuratowski: no K5 / K3,3 subdivision), for n <= 9 ----

namespace detail {

inline bool path_through(const Graph& g, int a, int b, std::vector<int>& via) {
    if (via.empty()) return g.has_edge(a, b);
    std::sort(via.begin(), via.end());
    do {
        int prev = a;
        bool ok = true;
        for (int x : via) {
            if (!g.has_edge(prev, x)) {
                ok = false;
                break;
            }
            prev = x;
        }
        if (ok && g.has_edge(prev, b)) return true;
    } while (std::next_permutation(via.begin(), via.end()));
    return false;
}

// Tries to realize a subdivision with the given branch vertices and pair
// list: every non-branch vertex may serve as an interior vertex of at most
// one path.
inline bool subdivision_exists(const Graph& g, const std::vector<int>& branch,
                               const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> extras;
    std::vector<bool> is_branch(g.vertex_count(), false);
    for (int b : branch) is_branch[b] = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!is_branch[v]) extras.push_back(v);

    int npairs = static_cast<int>(pairs.size());
    std::vector<int> assign(extras.size(), -1);  // pair index or -1 unused
    std::function<bool(size_t)> go = [&](size_t i) -> bool {
        if (i == extras.size()) {
            for (int p = 0; p < npairs; ++p) {
                std::vector<int> via;
                for (size_t e = 0; e < extras.size(); ++e)
                    if (assign[e] == p) via.push_back(extras[e]);
                if (!path_through(g, pairs[p].first, pairs[p].second, via)) return false;
            }
            return true;
        }
        for (int p = -1; p < npairs; ++p) {
            assign[i] = p;
            if (go(i + 1)) return true;
        }
        assign[i] = -1;
        return false;
    };
    return go(0);
}

}  // namespace detail

inline bool brute_force_planar(const Graph& g_in) {
    Graph g = g_in.underlying_undirected();
    int n = g.vertex_count();
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;

    // K5 subdivision: 5 branch vertices of degree >= 4.
    std::vector<int> comb;
    std::function<bool(int, int, int, const std::function<bool()>&)> choose =
        [&](int start, int left, int mindeg, const std::function<bool()>& done) -> bool {
        if (left == 0) return done();
        for (int v = start; v <= n - left; ++v) {
            if (static_cast<int>(g.neighbors(v).size()) < mindeg) continue;
            comb.push_back(v);
            if (choose(v + 1, left - 1, mindeg, done)) return true;
            comb.pop_back();
        }
        return false;
    };

    bool found = choose(0, 5, 4, [&]() {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) pairs.emplace_back(comb[i], comb[j]);
        return detail::subdivision_exists(g, comb, pairs);
    });
    if (found) return false;

    // K3,3 subdivision: 6 branch vertices of degree >= 3, split 3|3.
    comb.clear();
    found = choose(0, 6, 3, [&]() {
        std::vector<int> mask = {0, 0, 0, 1, 1, 1};
        std::sort(mask.begin(), mask.end());
        do {
            if (mask[0] != 0) break;  // fix side of the first vertex, halving the work
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j)
                    if (mask[i] == 0 && mask[j] == 1) pairs.emplace_back(comb[i], comb[j]);
            if (detail::subdivision_exists(g, comb, pairs)) return true;
        } while (std::next_permutation(mask.begin(), mask.end()));
        return false;
    });
    return !found;
}

// ---- exhaustive clique / biclique enumeration, for n <= 12 ----

inline bool is_clique(const Graph& g, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

inline std::vector<std::vector<int>> brute_max_cliques(const Graph& g, int min_size) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        if (static_cast<int>(s.size()) < min_size || !is_clique(g, s)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (mask & (1u << v)) continue;
            bool all = true;
            for (int u : s)
                if (!g.has_edge(u, v)) {
                    all = false;
                    break;
                }
            if (all) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

inline bool is_cross_complete(const Graph& g, const std::vector<int>& a,
                              const std::vector<int>& b) {
    for (int x : a)
        for (int y : b)
            if (x == y || !g.has_edge(x, y)) return false;
    return true;
}

inline std::vector<Biclique> brute_max_bicliques(const Graph& g) {
    int n = g.vertex_count();
    std::set<Biclique> out;
    std::vector<int> side(n, 0);  // 0 neither, 1 A, 2 B
    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            std::vector<int> a, b;
            for (int u = 0; u < n; ++u) {
                if (side[u] == 1) a.push_back(u);
                if (side[u] == 2) b.push_back(u);
            }
            if (a.size() < 2 || b.size() < 2) return;
            if (!is_cross_complete(g, a, b)) return;
            for (int u = 0; u < n; ++u) {
                if (side[u] != 0) continue;
                bool to_a = true, to_b = true;
                for (int y : b)
                    if (!g.has_edge(u, y)) to_a = false;
                for (int x : a)
                    if (!g.has_edge(u, x)) to_b = false;
                if (to_a || to_b) return;  // extendable
            }
            out.insert(confluent::make_biclique(a, b));
            return;
        }
        for (int s = 0; s <= 2; ++s) {
            side[v] = s;
            go(v + 1);
        }
        side[v] = 0;
    };
    go(0);
    return {out.begin(), out.end()};
}

// All bicliques with both sides >= 2 (not only maximal), canonical, n <= 12.
inline std::set<Biclique> brute_all_bicliques(const Graph& g) {
    int n = g.vertex_count();
    std::set<Biclique> out;
    std::vector<int> side(n, 0);
    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            std::vector<int> a, b;
            for (int u = 0; u < n; ++u) {
                if (side[u] == 1) a.push_back(u);
                if (side[u] == 2) b.push_back(u);
            }
            if (a.size() < 2 || b.size() < 2) return;
            if (is_cross_complete(g, a, b)) out.insert(confluent::make_biclique(a, b));
            return;
        }
        for (int s = 0; s <= 2; ++s) {
            side[v] = s;
            go(v + 1);
        }
        side[v] = 0;
    };
    go(0);
    return out;
}

// All cliques of size >= min_size (not only maximal), n <= 20.
inline std::set<std::vector<int>> brute_all_cliques(const Graph& g, int min_size) {
    std::set<std::vector<int>> out;
    std::vector<int> cur;
    int n = g.vertex_count();
    std::function<void(int)> go = [&](int start) {
        if (static_cast<int>(cur.size()) >= min_size) out.insert(cur);
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(v);
            go(v + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

// ---- structure helpers ----

inline int girth(const Graph& g) {
    int n = g.vertex_count(), best = -1;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1), par(n, -1);
        std::vector<int> q{s};
        dist[s] = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            int v = q[i];
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push_back(w);
                } else if (w != par[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;  // -1 when acyclic
}

inline bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> q{s};
        for (size_t i = 0; i < q.size(); ++i) {
            int v = q[i];
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// ---- generators ----

inline Graph gnp(int n, double p, std::mt19937& rng) {
    Graph g = Graph::undirected(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

inline Graph random_digraph(int n, double p, std::mt19937& rng) {
    Graph g = Graph::directed(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double c = coin(rng);
            if (c < p / 2)
                g.add_edge(u, v);
            else if (c < p)
                g.add_edge(v, u);
            else if (c < p * 1.1)
                g.add_edge(u, v), g.add_edge(v, u);
        }
    return g;
}

// Each vertex arrives with at most `k` back-edges, so degeneracy <= k.
inline Graph bounded_degeneracy_graph(int n, int k, std::mt19937& rng) {
    Graph g = Graph::undirected(n);
    for (int v = 1; v < n; ++v) {
        int tries = std::min(v, k);
        std::set<int> chosen;
        for (int i = 0; i < tries; ++i) chosen.insert(static_cast<int>(rng() % v));
        for (int u : chosen) g.add_edge(u, v);
    }
    return g;
}

inline Graph random_tree(int n, std::mt19937& rng) {
    if (n == 1) return Graph::undirected(1);
    std::vector<int> seq(std::max(0, n - 2));
    for (auto& x : seq) x = static_cast<int>(rng() % n);
    return confluent::tree_from_prufer(seq);
}

inline confluent::IntervalModel random_interval_model(int n, std::mt19937& rng) {
    confluent::IntervalModel m;
    for (int i = 0; i < n; ++i) {
        long long a = static_cast<long long>(rng() % (2 * n + 1));
        long long b = static_cast<long long>(rng() % (2 * n + 1));
        if (a > b) std::swap(a, b);
        m.intervals.emplace_back(confluent::Rational(a), confluent::Rational(b));
    }
    return m;
}

inline confluent::CographExpr random_cograph_expr(int max_leaves, std::mt19937& rng) {
    int counter = 0;
    std::function<confluent::CographExpr(int&)> gen = [&](int& budget) -> confluent::CographExpr {
        if (budget <= 1 || rng() % 3 == 0) {
            budget -= 1;
            return confluent::CographExpr::leaf("v" + std::to_string(counter++));
        }
        int kids = 2 + static_cast<int>(rng() % 2);
        std::vector<confluent::CographExpr> cs;
        for (int i = 0; i < kids && budget > 0; ++i) cs.push_back(gen(budget));
        if (cs.size() < 2) return std::move(cs[0]);
        auto u = confluent::CographExpr::union_of(std::move(cs));
        if (rng() % 2) return confluent::CographExpr::complement_of(std::move(u));
        return u;
    };
    int budget = 2 + static_cast<int>(rng() % (max_leaves - 1));
    auto e = gen(budget);
    if (rng() % 2) return confluent::CographExpr::complement_of(std::move(e));
    return e;
}

}  // namespace testsupport
