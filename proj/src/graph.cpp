#include "confluent/graph.hpp"

#include <algorithm>
#include <sstream>

namespace confluent {

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self loop");
    Edge e = normalize(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;  // already present
    edges_.insert(it, e);
    auto& out = adj_[e.first];
    out.insert(std::lower_bound(out.begin(), out.end(), e.second), e.second);
    if (directed_) {
        auto& in = in_adj_[e.second];
        in.insert(std::lower_bound(in.begin(), in.end(), e.first), e.first);
    } else {
        auto& back = adj_[e.second];
        back.insert(std::lower_bound(back.begin(), back.end(), e.first), e.first);
    }
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    Edge e = normalize(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw std::invalid_argument("edge not present");
    edges_.erase(it);
    auto erase_from = [](std::vector<int>& vec, int x) {
        vec.erase(std::lower_bound(vec.begin(), vec.end(), x));
    };
    erase_from(adj_[e.first], e.second);
    if (directed_)
        erase_from(in_adj_[e.second], e.first);
    else
        erase_from(adj_[e.second], e.first);
}

void Graph::pop_isolated_vertex() {
    if (n_ == 0) throw std::logic_error("no vertex to remove");
    int v = n_ - 1;
    if (!adj_[v].empty() || !in_adj_[v].empty())
        throw std::logic_error("vertex to remove is not isolated");
    adj_.pop_back();
    in_adj_.pop_back();
    labels_.erase(v);
    --n_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Edge e = normalize(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size() + (directed_ ? in_adj_[v].size() : 0));
}

void Graph::set_label(int v, const std::string& name) {
    check_vertex(v);
    labels_[v] = name;
}

std::optional<std::string> Graph::label(int v) const {
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::underlying_undirected() const {
    if (!directed_) return *this;
    Graph g = Graph::undirected(n_);
    for (auto [u, v] : edges_) g.add_edge(u, v);
    g.labels_ = labels_;
    return g;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw ParseError("parse error at line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw ParseError("parse error at line 1: empty document");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    std::string mode, extra;
    if (!(hs >> n >> m >> mode) || (hs >> extra) || n < 0 || m < 0 ||
        (mode != "directed" && mode != "undirected"))
        parse_fail(lineno, "malformed header (want \"n m directed|undirected\")");

    Graph g(static_cast<int>(n), mode == "directed");
    long long seen = 0;
    std::string s;
    while (next_line(s)) {
        if (s.empty()) continue;
        if (s[0] == '#') {
            std::istringstream cs(s.substr(1));
            std::string kw;
            if (cs >> kw && kw == "label") {
                long long v;
                std::string name;
                if (!(cs >> v)) parse_fail(lineno, "malformed label comment");
                std::getline(cs, name);
                size_t pos = name.find_first_not_of(' ');
                if (pos == std::string::npos) parse_fail(lineno, "label comment missing name");
                if (v < 0 || v >= n) parse_fail(lineno, "label vertex id out of range");
                g.set_label(static_cast<int>(v), name.substr(pos));
            }
            continue;
        }
        std::istringstream es(s);
        long long u, v;
        if (!(es >> u >> v) || (es >> extra))
            parse_fail(lineno, "malformed edge line");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lineno, "vertex id out of range");
        if (u == v) parse_fail(lineno, "self loop at vertex " + std::to_string(u));
        if (++seen > m) parse_fail(lineno, "more edge lines than declared");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (seen < m)
        throw ParseError("parse error at line " + std::to_string(lineno) +
                         ": fewer edge lines than declared");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' '
        << (g.is_directed() ? "directed" : "undirected") << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    for (const auto& [v, name] : g.labels()) out << "# label " << v << ' ' << name << '\n';
    return out.str();
}

Graph complement(const Graph& g) {
    if (g.is_directed()) throw std::invalid_argument("complement: directed input rejected");
    int n = g.vertex_count();
    Graph c = Graph::undirected(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    for (const auto& [v, name] : g.labels()) c.set_label(v, name);
    return c;
}

Graph subdivide(const Graph& g) {
    if (g.is_directed()) throw std::invalid_argument("subdivide: directed input rejected");
    int n = g.vertex_count();
    Graph s = Graph::undirected(n + g.edge_count());
    int next = n;
    for (auto [u, v] : g.edges()) {
        s.add_edge(u, next);
        s.add_edge(next, v);
        ++next;
    }
    for (const auto& [v, name] : g.labels()) s.set_label(v, name);
    return s;
}

Graph interval_graph(const IntervalModel& m) {
    for (const auto& [a, b] : m.intervals)
        if (a > b) throw std::invalid_argument("interval with a > b");
    int n = static_cast<int>(m.intervals.size());
    Graph g = Graph::undirected(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& [ai, bi] = m.intervals[i];
            const auto& [aj, bj] = m.intervals[j];
            if (aj <= bi && ai <= bj) g.add_edge(i, j);
        }
    return g;
}

CographExpr CographExpr::union_of(std::vector<CographExpr> cs) {
    if (cs.size() < 2) throw std::invalid_argument("union needs >= 2 children");
    CographExpr e;
    e.kind = Kind::Union;
    e.children = std::move(cs);
    return e;
}

CographExpr CographExpr::complement_of(CographExpr c) {
    if (c.kind == Kind::Complement) return std::move(c.children[0]);  // normalize
    CographExpr e;
    e.kind = Kind::Complement;
    e.children.push_back(std::move(c));
    return e;
}

namespace {

struct ExprParser {
    const std::string& s;
    size_t i = 0;

    explicit ExprParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("cograph expression error at offset " + std::to_string(i) + ": " + what);
    }

    CographExpr parse_expr() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end");
        if (s[i] == '~') {
            ++i;
            return CographExpr::complement_of(parse_expr());
        }
        if (s[i] == '(') {
            ++i;
            std::vector<CographExpr> parts;
            parts.push_back(parse_expr());
            skip_ws();
            while (i < s.size() && s[i] == '+') {
                ++i;
                parts.push_back(parse_expr());
                skip_ws();
            }
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            if (parts.size() == 1) return std::move(parts[0]);
            return CographExpr::union_of(std::move(parts));
        }
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (i == start) fail("expected leaf name, '(' or '~'");
        return CographExpr::leaf(s.substr(start, i - start));
    }

    CographExpr parse_all() {
        CographExpr e = parse_expr();
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return e;
    }
};

void collect_leaves(const CographExpr& e, std::vector<std::string>& out) {
    switch (e.kind) {
        case CographExpr::Kind::Leaf: out.push_back(e.label); break;
        case CographExpr::Kind::Union:
        case CographExpr::Kind::Complement:
            for (const auto& c : e.children) collect_leaves(c, out);
            break;
    }
}

// Returns adjacency over the leaf index range [base, base + k) and k.
int eval_cograph(const CographExpr& e, int base, std::vector<std::vector<bool>>& adj) {
    switch (e.kind) {
        case CographExpr::Kind::Leaf:
            return 1;
        case CographExpr::Kind::Union: {
            int k = 0;
            for (const auto& c : e.children) k += eval_cograph(c, base + k, adj);
            return k;
        }
        case CographExpr::Kind::Complement: {
            int k = eval_cograph(e.children[0], base, adj);
            for (int a = base; a < base + k; ++a)
                for (int b = a + 1; b < base + k; ++b) {
                    adj[a][b] = !adj[a][b];
                    adj[b][a] = adj[a][b];
                }
            return k;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

CographExpr parse_cograph_expr(const std::string& text) {
    return ExprParser(text).parse_all();
}

Graph cograph_graph(const CographExpr& e) {
    std::vector<std::string> leaves;
    collect_leaves(e, leaves);
    int n = static_cast<int>(leaves.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    eval_cograph(e, 0, adj);
    Graph g = Graph::undirected(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (adj[a][b]) g.add_edge(a, b);
    for (int v = 0; v < n; ++v) g.set_label(v, leaves[v]);
    return g;
}

Graph tree_from_prufer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    for (int x : seq)
        if (x < 0 || x >= n) throw std::invalid_argument("prüfer entry out of range");
    Graph g = Graph::undirected(n);
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    // Standard linear decode: repeatedly attach the smallest leaf.
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        g.add_edge(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n < 1");
    Graph g = Graph::undirected(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: side < 1");
    Graph g = Graph::undirected(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: n < 1");
    Graph g = Graph::undirected(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n < 3");
    Graph g = make_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_hypercube(int d) {
    if (d < 1) throw std::invalid_argument("hypercube: d < 1");
    if (d > 20) throw std::invalid_argument("hypercube: d too large");
    int n = 1 << d;
    Graph g = Graph::undirected(n);
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit) {
            int w = v ^ (1 << bit);
            if (v < w) g.add_edge(v, w);
        }
    for (int v = 0; v < n; ++v) {
        std::string bits(d, '0');
        for (int bit = 0; bit < d; ++bit)
            if (v & (1 << (d - 1 - bit))) bits[bit] = '1';
        g.set_label(v, bits);
    }
    return g;
}

Graph make_petersen() {
    Graph g = Graph::undirected(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph make_petersen_minus_vertex() {
    Graph p = make_petersen();
    Graph g = Graph::undirected(9);
    for (auto [u, v] : p.edges())
        if (u != 9 && v != 9) g.add_edge(u, v);
    return g;
}

}  // namespace confluent
