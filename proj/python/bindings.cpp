#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rainbow/cnf.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/io.hpp"
#include "rainbow/prob_coloring.hpp"
#include "rainbow/probability.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/verify.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

// Colorings cross the boundary as plain lists of color ids.
py::object maybe_colors(const std::optional<EdgeColoring>& chi) {
    return chi ? py::cast(chi->colors) : py::none();
}

py::dict derand_dict(const DerandResult& r) {
    py::dict d;
    d["coloring"] = r.coloring.colors;
    d["initial_estimator"] = r.initial_estimator;
    d["final_estimator"] = r.final_estimator;
    d["verified"] = r.verified;
    d["monotone"] = r.monotone;
    return d;
}

TraceFn trace_of(const py::object& cb) {
    if (cb.is_none()) {
        return {};
    }
    return [cb](EdgeId e, Color c, double total) { cb(e, c, total); };
}

}  // namespace

PYBIND11_MODULE(_rainbow, m) {
    m.doc() = "Rainbow connection of edge-colored graphs";

    py::register_exception<DiameterViolation>(m, "DiameterViolation", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<Vertex, Vertex>>&>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<Vertex, Vertex>> out;
                                   for (const auto& e : g.edges()) {
                                       out.emplace_back(e.u, e.v);
                                   }
                                   return out;
                               })
        .def("adjacent", &Graph::adjacent)
        .def("edge_index", &Graph::edge_index)
        .def("degree", &Graph::degree)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("clique_graph", &clique_graph);
    m.def("star_graph", &star_graph);
    m.def("complete_bipartite_graph", &complete_bipartite_graph);
    m.def("gnp_graph", &gnp_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("gen_named", &gen_named, py::arg("kind"), py::arg("params"), py::arg("seed") = 0);

    m.def("is_connected", &is_connected);
    m.def("diameter", &diameter);
    m.def("min_degree", &min_degree);
    m.def("diameter_bound_check", &diameter_bound_check);

    m.def(
        "parse_graph",
        [](const std::string& text) {
            GraphFile f = parse_graph_text(text);
            py::object colors = f.kind == ColoringKind::Uncolored ? py::none() : py::cast(f.coloring.colors);
            return py::make_tuple(f.graph, colors, f.comments);
        },
        "Returns (graph, colors or None, comments). Free edges carry -1.");
    m.def(
        "format_graph",
        [](const Graph& g, std::optional<std::vector<Color>> colors) {
            return colors ? graph_to_string(g, EdgeColoring(*colors)) : graph_to_string(g);
        },
        py::arg("graph"), py::arg("colors") = py::none());

    m.def(
        "rainbow_path",
        [](const Graph& g, const std::vector<Color>& colors, Vertex s, Vertex t) -> py::object {
            auto w = rainbow_path_exists(g, EdgeColoring(colors), s, t);
            return w ? py::cast(w->path) : py::none();
        },
        py::arg("graph"), py::arg("colors"), py::arg("s"), py::arg("t"));
    m.def(
        "is_rainbow_connected",
        [](const Graph& g, const std::vector<Color>& colors, unsigned threads) -> py::object {
            VerifyOptions opt;
            opt.threads = threads;
            auto r = is_rainbow_connected(g, EdgeColoring(colors), opt);
            if (r.connected) {
                return py::none();
            }
            return py::make_tuple(r.failing_pair->u, r.failing_pair->v);
        },
        py::arg("graph"), py::arg("colors"), py::arg("threads") = 1,
        "None when rainbow connected, otherwise the first failing pair.");
    m.def(
        "pairs_rainbow_connected",
        [](const Graph& g, const std::vector<Color>& colors, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
            return pairs_rainbow_connected(g, EdgeColoring(colors), PairSet(g.num_vertices(), pairs));
        });

    m.def(
        "rc_exact",
        [](const Graph& g, std::optional<int> k_max) -> py::object {
            std::optional<RcResult> r;
            {
                py::gil_scoped_release release;
                r = rc_exact(g, k_max);
            }
            return r ? py::make_tuple(r->rc, r->witness.colors) : py::object(py::none());
        },
        py::arg("graph"), py::arg("k_max") = py::none(), "(rc, witness colors), or None above k_max.");
    m.def("decide_rc_k", [](const Graph& g, int k) { return maybe_colors(decide_rc_k(g, k)); });
    m.def("subset_rc2", [](const Graph& g, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
        return maybe_colors(subset_rc2(g, PairSet(g.num_vertices(), pairs)));
    });
    m.def("extend_rc2", [](const Graph& g, const std::vector<Color>& partial) {
        return maybe_colors(extend_rc2(g, PartialEdgeColoring(partial)));
    });
    m.def("tree_coloring", [](const Graph& g) { return tree_coloring(g).colors; });

    m.def(
        "parse_cnf",
        [](const std::string& text) {
            Cnf3 phi = parse_cnf_text(text);
            std::vector<std::vector<int>> clauses;
            for (const auto& cl : phi.clauses) {
                std::vector<int> row;
                for (const auto& lit : cl) {
                    row.push_back(lit.positive ? lit.var + 1 : -(lit.var + 1));
                }
                clauses.push_back(row);
            }
            return py::make_tuple(phi.num_vars, clauses);
        },
        "(num_vars, clauses) with DIMACS-signed 1-based literals.");
    m.def("sat_brute", [](const std::string& text) -> py::object {
        auto a = sat_brute(parse_cnf_text(text));
        return a ? py::cast(*a) : py::none();
    });
    m.def("gadget_extend_rc2", [](const std::string& text) {
        auto norm = normalize_cnf(parse_cnf_text(text));
        if (norm.status != CnfStatus::Normal) {
            throw CnfError("formula is decided by normalization alone");
        }
        ExtendGadget gad = gadget_extend_rc2(norm.formula);
        return py::make_tuple(gad.graph, gad.partial.colors, gad.apex);
    });
    m.def("gadget_st_rainbow", [](const std::string& text) {
        auto norm = normalize_cnf(parse_cnf_text(text));
        if (norm.status != CnfStatus::Normal) {
            throw CnfError("formula is decided by normalization alone");
        }
        StGadget gad = gadget_st_rainbow(norm.formula);
        return py::make_tuple(gad.graph, gad.coloring.colors, gad.s, gad.t);
    });
    m.def("gadget_verify_wrap", [](const Graph& g, const std::vector<Color>& colors, Vertex s, Vertex t) {
        WrappedInstance w = gadget_verify_wrap(g, EdgeColoring(colors), s, t);
        return py::make_tuple(w.graph, w.coloring.colors);
    });

    m.def(
        "rainbow_probability",
        [](const std::vector<Color>& colors, int palette, Color lo, std::optional<Color> hi) {
            Fraction f = rainbow_probability(colors, palette, ColorRange{lo, hi.value_or(palette)});
            return py::make_tuple(f.num, f.den);
        },
        py::arg("colors"), py::arg("palette"), py::arg("lo") = 0, py::arg("hi") = py::none(),
        "(num, den); -1 marks an unassigned edge.");

    m.def(
        "random_k_coloring", [](const Graph& g, int k, std::uint64_t seed) { return random_k_coloring(g, k, seed).colors; },
        py::arg("graph"), py::arg("k"), py::arg("seed"));
    m.def(
        "las_vegas_rc3",
        [](const Graph& g, std::uint64_t seed, int max_iters) {
            auto r = las_vegas_rc3(g, seed, max_iters);
            return py::make_tuple(maybe_colors(r.coloring), r.iterations);
        },
        py::arg("graph"), py::arg("seed") = 1, py::arg("max_iters") = 1000);
    m.def(
        "derand_rc3",
        [](const Graph& g, std::optional<int> threshold, py::object trace) {
            return derand_dict(derand_rc3(g, threshold, trace_of(trace)));
        },
        py::arg("graph"), py::arg("threshold") = py::none(), py::arg("trace") = py::none());
    m.def(
        "derand_8_coloring",
        [](const Graph& g, std::vector<std::vector<Vertex>> classes, py::object trace) {
            return derand_dict(derand_8_coloring(g, Partition(g.num_vertices(), std::move(classes)), trace_of(trace)));
        },
        py::arg("graph"), py::arg("classes"), py::arg("trace") = py::none());
    m.def(
        "partition_coloring_pipeline",
        [](const Graph& g, std::vector<std::vector<Vertex>> classes) {
            auto r = partition_coloring_pipeline(g, Partition(g.num_vertices(), std::move(classes)));
            py::dict d;
            d["coloring"] = maybe_colors(r.coloring);
            d["within_classes"] = derand_dict(r.within_classes);
            std::vector<std::pair<Vertex, Vertex>> tree;
            for (const auto& e : r.tree) {
                tree.emplace_back(e.u, e.v);
            }
            d["tree"] = tree;
            return d;
        },
        py::arg("graph"), py::arg("classes"));
    m.def("greedy_matching", &greedy_matching, py::arg("a_size"), py::arg("b_size"), py::arg("edges"));
}
