#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "confluent/graph.hpp"
#include "confluent/layout.hpp"
#include "confluent/oracle.hpp"
#include "confluent/planarity.hpp"
#include "confluent/reduction.hpp"
#include "confluent/track_model.hpp"

namespace {

using namespace confluent;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // non-planar / failed / not-reducible
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << data;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

IntervalModel parse_interval_model(const std::string& text) {
    IntervalModel m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a >> b)) throw std::runtime_error("interval line needs two endpoints: " + line);
        m.intervals.emplace_back(parse_rational(a), parse_rational(b));
    }
    return m;
}

unsigned seed_from_env() {
    const char* s = std::getenv("CONFLUENT_SEED");
    return s ? static_cast<unsigned>(std::stoul(s)) : 20011u;
}

Graph run_generate(const std::string& family, const std::vector<std::string>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw CLI::ValidationError("generate", family + " takes " + std::to_string(k) +
                                                       " parameter(s)");
    };
    if (family == "complete") {
        want(1);
        return make_complete(std::stoi(params[0]));
    }
    if (family == "complete_bipartite") {
        want(2);
        return make_complete_bipartite(std::stoi(params[0]), std::stoi(params[1]));
    }
    if (family == "path") {
        want(1);
        return make_path(std::stoi(params[0]));
    }
    if (family == "cycle") {
        want(1);
        return make_cycle(std::stoi(params[0]));
    }
    if (family == "hypercube") {
        want(1);
        return make_hypercube(std::stoi(params[0]));
    }
    if (family == "petersen") {
        want(0);
        return make_petersen();
    }
    if (family == "petersen_minus_vertex") {
        want(0);
        return make_petersen_minus_vertex();
    }
    if (family == "interval") {
        want(1);
        return interval_graph(parse_interval_model(read_input(params[0])));
    }
    if (family == "cograph") {
        want(1);
        return cograph_graph(parse_cograph_expr(params[0]));
    }
    if (family == "tree") {
        if (params.empty())
            throw CLI::ValidationError("generate",
                                       "tree takes a prüfer sequence, 'random n', or 'edges <file>'");
        if (params[0] == "random") {
            want(2);
            int n = std::stoi(params[1]);
            if (n < 2) throw CLI::ValidationError("generate", "random tree needs n >= 2");
            std::mt19937 rng(seed_from_env());
            std::vector<int> seq(std::max(0, n - 2));
            for (auto& x : seq) x = static_cast<int>(rng() % n);
            return tree_from_prufer(seq);
        }
        if (params[0] == "edges") {
            want(2);
            Graph g = parse_graph(read_input(params[1]));
            if (g.is_directed() || g.edge_count() != g.vertex_count() - 1)
                throw std::runtime_error("edge list is not a tree");
            return g;
        }
        std::vector<int> seq;
        for (const auto& p : params) seq.push_back(std::stoi(p));
        return tree_from_prufer(seq);
    }
    throw CLI::ValidationError("generate", "unknown family: " + family);
}

int cmd_draw_pipeline(const Graph& g, const std::string& out_path,
                      const std::string& network_out, const RenderOptions& opts) {
    ReductionResult r = g.is_directed() ? reduce_directed(g) : reduce_undirected(g);
    if (r.status != ReductionStatus::Planar) {
        std::cerr << "heuristic failed: no clique/biclique replacement sequence reached a "
                     "planar graph; try `confluent check <file> --oracle`\n";
        return kExitNegative;
    }
    TrackNetwork net = from_reduction(r);
    Embedding e = embed(net.underlying_graph());
    Layout l = layout_network(net, e);
    if (!network_out.empty()) write_output(network_out, net.to_json());
    write_output(out_path, emit_svg(net, l, opts));
    return kExitOk;
}

int cmd_draw_construction(const std::string& construction, const std::string& input,
                          const std::string& out_path, const std::string& network_out,
                          const RenderOptions& opts) {
    TrackNetwork net(false);
    if (construction == "interval") {
        net = build_interval_track(parse_interval_model(read_input(input)));
    } else if (construction == "cotree") {
        Graph tree = parse_graph(read_input(input));
        net = build_cotree_track(tree);
    } else if (construction == "cograph") {
        net = build_cograph_track(parse_cograph_expr(read_input(input)));
    } else if (construction == "cocycle") {
        net = build_cocycle_track(std::stoi(read_input(input)));
    } else {
        throw CLI::ValidationError("draw", "unknown construction: " + construction);
    }
    Embedding e = embed(net.underlying_graph());
    Layout l = layout_network(net, e);
    if (!network_out.empty()) write_output(network_out, net.to_json());
    write_output(out_path, emit_svg(net, l, opts));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"confluent: crossing-free track diagrams for non-planar graphs"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "emit a named graph family as an edge list");
    std::string gen_family, gen_out;
    std::vector<std::string> gen_params;
    gen->add_option("family", gen_family,
                    "complete|complete_bipartite|path|cycle|hypercube|petersen|"
                    "petersen_minus_vertex|interval|tree|cograph")
        ->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // check
    auto* chk = app.add_subcommand("check", "planarity or exact confluence check");
    std::string chk_file, chk_witness;
    bool chk_planar = false, chk_oracle = false;
    long long chk_max_states = OracleBudget{}.max_states;
    int chk_max_depth = OracleBudget{}.max_depth;
    chk->add_option("file", chk_file, "edge-list file ('-' for stdin)");
    chk->add_flag("--planar", chk_planar, "test planarity");
    chk->add_flag("--oracle", chk_oracle, "exhaustive merge search");
    chk->add_option("--max-states", chk_max_states, "oracle state budget");
    chk->add_option("--max-depth", chk_max_depth, "oracle depth budget");
    chk->add_option("--witness", chk_witness, "write the witness reduction log (JSON)");

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "list cliques or bicliques");
    std::string enu_file;
    bool enu_cliques = false, enu_bicliques = false, enu_directed = false;
    int enu_min_size = 4;
    enu->add_option("file", enu_file, "edge-list file ('-' for stdin)");
    enu->add_flag("--cliques", enu_cliques, "maximal cliques");
    enu->add_option("--min-size", enu_min_size, "minimum clique size (default 4)");
    enu->add_flag("--bicliques", enu_bicliques, "maximal bicliques, both sides >= 2");
    enu->add_flag("--directed-bicliques", enu_directed, "maximal one-way bicliques");

    // reduce
    auto* red = app.add_subcommand("reduce", "run the replacement heuristic, emit the log");
    std::string red_file, red_out;
    red->add_option("file", red_file, "edge-list file ('-' for stdin)");
    red->add_option("-o,--output", red_out, "log file (default stdout)");

    // draw
    auto* drw = app.add_subcommand("draw", "reduce and render as SVG");
    std::string drw_file, drw_out, drw_construction, drw_network_out;
    RenderOptions drw_opts;
    drw->add_option("file", drw_file, "input file ('-' for stdin)");
    drw->add_option("-o,--output", drw_out, "SVG file (default stdout)");
    drw->add_option("--construction", drw_construction,
                    "closed-form construction: interval|cotree|cograph|cocycle");
    drw->add_option("--network-out", drw_network_out, "also write the track network JSON");
    drw->add_option("--width", drw_opts.canvas_width, "canvas width");
    drw->add_option("--height", drw_opts.canvas_height, "canvas height");
    drw->add_flag("--labels", drw_opts.labels, "draw vertex labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            Graph g = run_generate(gen_family, gen_params);
            write_output(gen_out, serialize_graph(g));
            return kExitOk;
        }
        if (chk->parsed()) {
            if (chk_planar == chk_oracle) {
                std::cerr << "check: pass exactly one of --planar / --oracle\n";
                return kExitUsage;
            }
            Graph g = parse_graph(read_input(chk_file));
            if (chk_planar) {
                bool p = is_planar(g);
                std::cout << (p ? "planar" : "non-planar") << "\n";
                return p ? kExitOk : kExitNegative;
            }
            OracleBudget budget;
            budget.max_states = chk_max_states;
            budget.max_depth = chk_max_depth;
            OracleVerdict v = decide_confluence(g.underlying_undirected(), budget);
            switch (v.outcome) {
                case OracleOutcome::Reducible: std::cout << "reducible\n"; break;
                case OracleOutcome::NotReducible: std::cout << "not-reducible\n"; break;
                case OracleOutcome::Inconclusive:
                    std::cout << "inconclusive(" << v.reason << ")\n";
                    break;
            }
            std::cout << "states explored: " << v.stats.states_explored
                      << ", memo hits: " << v.stats.memo_hits << "\n";
            if (v.outcome == OracleOutcome::Reducible && !chk_witness.empty()) {
                ReductionResult r;
                r.original = g;
                r.steps = v.witness;
                r.reduced = replay(g, v.witness);
                r.status = ReductionStatus::Planar;
                write_output(chk_witness, reduction_log_json(r));
            }
            return v.outcome == OracleOutcome::Reducible ? kExitOk : kExitNegative;
        }
        if (enu->parsed()) {
            if (enu_cliques + enu_bicliques + enu_directed != 1) {
                std::cerr << "enumerate: pass exactly one of --cliques / --bicliques / "
                             "--directed-bicliques\n";
                return kExitUsage;
            }
            Graph g = parse_graph(read_input(enu_file));
            std::ostringstream out;
            if (enu_cliques) {
                for (const auto& c : list_max_cliques(g, enu_min_size)) {
                    for (size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
                    out << "\n";
                }
            } else if (enu_bicliques) {
                for (const auto& b : list_max_bicliques(g)) {
                    for (size_t i = 0; i < b.side_a.size(); ++i) out << (i ? " " : "") << b.side_a[i];
                    out << " | ";
                    for (size_t i = 0; i < b.side_b.size(); ++i) out << (i ? " " : "") << b.side_b[i];
                    out << "\n";
                }
            } else {
                for (const auto& b : directed_bicliques(g)) {
                    for (size_t i = 0; i < b.side_a.size(); ++i) out << (i ? " " : "") << b.side_a[i];
                    out << " | ";
                    for (size_t i = 0; i < b.side_b.size(); ++i) out << (i ? " " : "") << b.side_b[i];
                    out << "\n";
                }
            }
            std::cout << out.str();
            return kExitOk;
        }
        if (red->parsed()) {
            Graph g = parse_graph(read_input(red_file));
            ReductionResult r = g.is_directed() ? reduce_directed(g) : reduce_undirected(g);
            write_output(red_out, reduction_log_json(r));
            return r.status == ReductionStatus::Planar ? kExitOk : kExitNegative;
        }
        if (drw->parsed()) {
            if (!drw_construction.empty())
                return cmd_draw_construction(drw_construction, drw_file, drw_out,
                                             drw_network_out, drw_opts);
            Graph g = parse_graph(read_input(drw_file));
            return cmd_draw_pipeline(g, drw_out, drw_network_out, drw_opts);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
