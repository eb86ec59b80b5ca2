// Command-line front end: rainbow <subcommand> ...
//
// Exit codes: 0 yes / success, 1 no / absent, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "rainbow/cnf.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/io.hpp"
#include "rainbow/prob_coloring.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/verify.hpp"

using json = nlohmann::json;
using namespace rainbow;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    bool json = false;
    unsigned threads = 1;
    std::string output;
};

VerifyOptions verify_options(const Common& c) {
    VerifyOptions o;
    o.threads = c.threads;
    return o;
}

// Writes to the -o file when given, else to stdout.
void emit(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output);
    if (!out) {
        throw UsageError("cannot write '" + c.output + "'");
    }
    out << text;
}

std::string colored_text(const Graph& g, const EdgeColoring& chi, const std::vector<std::string>& comments = {}) {
    std::ostringstream os;
    write_graph(os, g, chi, comments);
    return os.str();
}

json coloring_json(const Graph& g, const EdgeColoring& chi) {
    json arr = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        arr.push_back({g.edge(e).u + 1, g.edge(e).v + 1, chi.colors[static_cast<std::size_t>(e)]});
    }
    return arr;
}

json path_json(const std::vector<Vertex>& path) {
    json arr = json::array();
    for (Vertex v : path) {
        arr.push_back(v + 1);
    }
    return arr;
}

std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

EdgeColoring load_total(const GraphFile& file) {
    if (file.kind != ColoringKind::Colored) {
        throw UsageError("graph file must color every edge");
    }
    return file.total_coloring();
}

Vertex vertex_arg(const Graph& g, int one_based) {
    if (one_based < 1 || one_based > g.num_vertices()) {
        throw UsageError("vertex " + std::to_string(one_based) + " out of range 1.." +
                         std::to_string(g.num_vertices()));
    }
    return one_based - 1;
}

Cnf3 load_normalized(const std::string& path, std::vector<std::string>& comments) {
    NormalizedCnf norm = normalize_cnf(read_cnf_file(path));
    if (norm.status == CnfStatus::TriviallySat) {
        throw UsageError("formula is trivially satisfiable after pure-literal elimination; no gadget to build");
    }
    if (norm.status == CnfStatus::TriviallyUnsat) {
        throw UsageError("formula is trivially unsatisfiable after pure-literal elimination; no gadget to build");
    }
    for (std::size_t i = 0; i < norm.original_var.size(); ++i) {
        if (norm.original_var[i] != static_cast<int>(i)) {
            comments.push_back("var x" + std::to_string(i + 1) + " = input x" + std::to_string(norm.original_var[i] + 1));
        }
    }
    return norm.formula;
}

// Opens the trace file and returns a callback writing "t <edge> <color> <estimator>" lines.
TraceFn make_trace(const std::string& path, std::shared_ptr<std::ofstream>& holder) {
    if (path.empty()) {
        return {};
    }
    holder = std::make_shared<std::ofstream>(path);
    if (!*holder) {
        throw UsageError("cannot write '" + path + "'");
    }
    auto out = holder;
    return [out](EdgeId e, Color c, double total) {
        *out << "t " << e + 1 << ' ' << c << ' ' << format_double(total) << '\n';
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rainbow connectivity toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json, "Print one JSON document instead of text");
    app.add_option("--threads", common.threads, "Worker threads for exact verification")->check(CLI::PositiveNumber);

    // gen
    std::string gen_kind;
    std::vector<double> gen_params;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("kind", gen_kind, "cycle|path|clique|star|complete_bipartite|gnp")->required();
    gen->add_option("params", gen_params, "Generator parameters")->required();
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("-o", common.output, "Output file");

    // reduce
    std::string reduce_kind;
    std::string reduce_input;
    int wrap_s = 0;
    int wrap_t = 0;
    auto* reduce = app.add_subcommand("reduce", "Compile a hardness gadget");
    reduce->add_option("kind", reduce_kind, "extend-rc2|st-path|verify-wrap")
        ->required()
        ->check(CLI::IsMember({"extend-rc2", "st-path", "verify-wrap"}));
    reduce->add_option("input", reduce_input, "CNF file, or colored graph for verify-wrap")->required();
    auto* opt_s = reduce->add_option("--s", wrap_s, "Source vertex (verify-wrap)");
    auto* opt_t = reduce->add_option("--t", wrap_t, "Target vertex (verify-wrap)");
    reduce->add_option("-o", common.output, "Output file");

    // verify
    std::string graph_path;
    std::string pairs_path;
    std::vector<int> st;
    auto* verify = app.add_subcommand("verify", "Check rainbow connectivity of a colored graph");
    verify->add_option("graph", graph_path, "Colored graph file")->required();
    auto* opt_pairs = verify->add_option("--pairs", pairs_path, "Only these pairs");
    auto* opt_st = verify->add_option("--st", st, "Only the pair U V")->expected(2);
    opt_pairs->excludes(opt_st);

    // solve
    std::string solve_kind;
    std::optional<int> max_k;
    auto* solve = app.add_subcommand("solve", "Exact rainbow connection number");
    solve->add_option("kind", solve_kind, "rc")->required()->check(CLI::IsMember({"rc"}));
    solve->add_option("graph", graph_path, "Graph file")->required();
    solve->add_option("--max-k", max_k, "Give up above this many colors")->check(CLI::PositiveNumber);
    solve->add_option("-o", common.output, "Write the witness coloring here");

    // decide
    std::string decide_kind;
    auto* decide = app.add_subcommand("decide", "Exact two-color decision problems");
    decide->add_option("kind", decide_kind, "rc2|subset-rc2|extend-rc2")
        ->required()
        ->check(CLI::IsMember({"rc2", "subset-rc2", "extend-rc2"}));
    decide->add_option("graph", graph_path, "Graph file")->required();
    decide->add_option("--pairs", pairs_path, "Pair file (subset-rc2)");
    decide->add_option("-o", common.output, "Write the witness coloring here");

    // color
    std::string color_kind;
    std::string partition_path;
    std::string trace_path;
    int max_iters = 1000;
    auto* color = app.add_subcommand("color", "Construct a coloring");
    color->add_option("kind", color_kind, "tree|random3|lasvegas3|derand3|derand8|pipeline")
        ->required()
        ->check(CLI::IsMember({"tree", "random3", "lasvegas3", "derand3", "derand8", "pipeline"}));
    color->add_option("graph", graph_path, "Graph file")->required();
    color->add_option("--partition", partition_path, "Partition file (derand8, pipeline; default one class)");
    color->add_option("--seed", seed, "Random seed");
    color->add_option("--max-iters", max_iters, "Attempts for lasvegas3")->check(CLI::PositiveNumber);
    color->add_option("--trace", trace_path, "Write per-edge estimator trace (derand3, derand8, pipeline)");
    color->add_option("-o", common.output, "Output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            Graph g = gen_named(gen_kind, gen_params, seed);
            emit(common, graph_to_string(g));
            return kYes;
        }

        if (reduce->parsed()) {
            std::ostringstream os;
            if (reduce_kind == "verify-wrap") {
                if (opt_s->count() == 0 || opt_t->count() == 0) {
                    throw UsageError("verify-wrap needs --s and --t");
                }
                GraphFile file = read_graph_file(reduce_input);
                EdgeColoring chi = load_total(file);
                WrappedInstance w = gadget_verify_wrap(file.graph, chi, vertex_arg(file.graph, wrap_s),
                                                       vertex_arg(file.graph, wrap_t));
                write_graph(os, w.graph, w.coloring, w.legend());
            } else {
                std::vector<std::string> comments;
                Cnf3 phi = load_normalized(reduce_input, comments);
                if (reduce_kind == "extend-rc2") {
                    ExtendGadget gadget = gadget_extend_rc2(phi);
                    auto legend = gadget.legend();
                    legend.insert(legend.end(), comments.begin(), comments.end());
                    write_graph(os, gadget.graph, gadget.partial, legend);
                } else {
                    StGadget gadget = gadget_st_rainbow(phi);
                    auto legend = gadget.legend();
                    legend.insert(legend.end(), comments.begin(), comments.end());
                    write_graph(os, gadget.graph, gadget.coloring, legend);
                }
            }
            emit(common, os.str());
            return kYes;
        }

        if (verify->parsed()) {
            GraphFile file = read_graph_file(graph_path);
            const Graph& g = file.graph;
            EdgeColoring chi = load_total(file);
            json doc;
            std::string text;
            bool answer = false;
            if (!st.empty()) {
                auto w = rainbow_path_exists(g, chi, vertex_arg(g, st[0]), vertex_arg(g, st[1]), verify_options(common));
                answer = w.has_value();
                if (answer) {
                    doc["witness_path"] = path_json(w->path);
                    text = "yes\npath";
                    for (Vertex v : w->path) {
                        text += " " + std::to_string(v + 1);
                    }
                    text += "\n";
                } else {
                    text = "no\n";
                }
            } else if (!pairs_path.empty()) {
                PairSet pairs = read_pairs_file(pairs_path, g.num_vertices());
                answer = pairs_rainbow_connected(g, chi, pairs, verify_options(common));
                text = answer ? "yes\n" : "no\n";
            } else {
                ConnectivityReport report = is_rainbow_connected(g, chi, verify_options(common));
                answer = report.connected;
                text = answer ? "yes\n"
                              : "no " + std::to_string(report.failing_pair->u + 1) + " " +
                                    std::to_string(report.failing_pair->v + 1) + "\n";
            }
            doc["answer"] = answer;
            std::cout << (common.json ? doc.dump() + "\n" : text);
            return answer ? kYes : kNo;
        }

        if (solve->parsed()) {
            GraphFile file = read_graph_file(graph_path);
            const Graph& g = file.graph;
            if (!is_connected(g)) {
                throw UsageError("graph is not connected, rc is undefined");
            }
            auto result = rc_exact(g, max_k);
            json doc;
            doc["answer"] = result.has_value();
            if (!result) {
                if (common.json) {
                    std::cout << doc.dump() << '\n';
                } else {
                    std::cout << "rc > " << *max_k << '\n';
                }
                return kNo;
            }
            doc["colors"] = result->rc;
            doc["coloring"] = coloring_json(g, result->witness);
            std::string witness = colored_text(g, result->witness, {"rc " + std::to_string(result->rc)});
            if (common.json) {
                std::cout << doc.dump() << '\n';
                if (!common.output.empty()) {
                    emit(common, witness);
                }
            } else if (common.output.empty()) {
                std::cout << result->rc << '\n' << witness;
            } else {
                std::cout << result->rc << '\n';
                emit(common, witness);
            }
            return kYes;
        }

        if (decide->parsed()) {
            GraphFile file = read_graph_file(graph_path);
            const Graph& g = file.graph;
            std::optional<EdgeColoring> witness;
            if (decide_kind == "rc2") {
                if (!is_connected(g)) {
                    throw UsageError("graph is not connected");
                }
                witness = decide_rc_k(g, 2);
            } else if (decide_kind == "subset-rc2") {
                if (pairs_path.empty()) {
                    throw UsageError("subset-rc2 needs --pairs");
                }
                witness = subset_rc2(g, read_pairs_file(pairs_path, g.num_vertices()));
            } else {
                witness = extend_rc2(g, file.coloring);
            }
            json doc;
            doc["answer"] = witness.has_value();
            if (witness) {
                doc["colors"] = witness->distinct_colors();
                doc["coloring"] = coloring_json(g, *witness);
            }
            if (common.json) {
                std::cout << doc.dump() << '\n';
                if (witness && !common.output.empty()) {
                    emit(common, colored_text(g, *witness));
                }
            } else if (!witness) {
                std::cout << "no\n";
            } else if (common.output.empty()) {
                std::cout << "yes\n" << colored_text(g, *witness);
            } else {
                std::cout << "yes\n";
                emit(common, colored_text(g, *witness));
            }
            return witness ? kYes : kNo;
        }

        if (color->parsed()) {
            GraphFile file = read_graph_file(graph_path);
            const Graph& g = file.graph;
            std::shared_ptr<std::ofstream> trace_file;
            TraceFn trace = make_trace(trace_path, trace_file);
            Partition pi = partition_path.empty() ? Partition::whole(g.num_vertices())
                                                  : read_partition_file(partition_path, g.num_vertices());
            std::optional<EdgeColoring> chi;
            std::optional<double> estimator;
            bool answer = false;
            std::vector<std::string> comments;
            if (color_kind == "tree") {
                chi = tree_coloring(g);
                answer = true;
            } else if (color_kind == "random3") {
                chi = random_k_coloring(g, 3, seed);
                answer = is_rainbow_connected(g, *chi, verify_options(common)).connected;
            } else if (color_kind == "lasvegas3") {
                auto r = las_vegas_rc3(g, seed, max_iters);
                chi = r.coloring;
                answer = chi.has_value();
                comments.push_back("iterations " + std::to_string(r.iterations));
            } else if (color_kind == "derand3") {
                auto r = derand_rc3(g, std::nullopt, trace);
                chi = r.coloring;
                estimator = r.initial_estimator;
                answer = r.verified;
            } else if (color_kind == "derand8") {
                auto r = derand_8_coloring(g, pi, trace);
                chi = r.coloring;
                estimator = r.initial_estimator;
                answer = r.verified;
            } else {
                auto r = partition_coloring_pipeline(g, pi, trace);
                chi = r.coloring;
                estimator = r.within_classes.initial_estimator;
                answer = chi.has_value();
                comments.push_back("tree-edges " + std::to_string(r.tree.size()));
            }
            if (estimator) {
                comments.insert(comments.begin(), "estimator " + format_double(*estimator));
                if (!common.json && !common.output.empty()) {
                    std::cout << "estimator " << format_double(*estimator) << '\n';
                }
            }
            json doc;
            doc["answer"] = answer;
            if (estimator) {
                doc["estimator"] = *estimator;
            }
            if (chi) {
                doc["colors"] = chi->distinct_colors();
                doc["coloring"] = coloring_json(g, *chi);
            }
            if (common.json) {
                std::cout << doc.dump() << '\n';
                if (chi && !common.output.empty()) {
                    emit(common, colored_text(g, *chi, comments));
                }
            } else if (chi) {
                emit(common, colored_text(g, *chi, comments));
            } else {
                std::cout << "no\n";
                for (const auto& c : comments) {
                    std::cout << "c " << c << '\n';
                }
            }
            return answer ? kYes : kNo;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
