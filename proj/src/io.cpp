#include "rainbow/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace rainbow {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) {
        out.push_back(tok);
    }
    return out;
}

long long parse_int(const std::string& tok, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail(line, "expected an integer, got '" + tok + "'");
    }
    return value;
}

Vertex parse_vertex(const std::string& tok, int n, std::size_t line) {
    long long v = parse_int(tok, line);
    if (v < 1 || v > n) {
        fail(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(v - 1);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return in;
}

bool is_comment(const std::string& line) { return line == "c" || line.rfind("c ", 0) == 0; }

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        out << "c " << c << '\n';
    }
}

void write_edges(std::ostream& out, const Graph& g, const std::vector<Color>* colors) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out << "e " << ed.u + 1 << ' ' << ed.v + 1;
        if (colors != nullptr) {
            Color c = (*colors)[static_cast<std::size_t>(e)];
            if (c == kUnassigned) {
                out << " *";
            } else {
                out << ' ' << c;
            }
        }
        out << '\n';
    }
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<std::pair<Vertex, Vertex>> edge_list;
    std::vector<Color> raw_colors;
    GraphFile file;
    int colored = 0;
    int starred = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (is_comment(line)) {
            file.comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
            continue;
        }
        auto tok = split(line);
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "p") {
            if (have_header) {
                fail(lineno, "duplicate header");
            }
            if (tok.size() != 4 || tok[1] != "graph") {
                fail(lineno, "expected 'p graph <n> <m>'");
            }
            n = parse_int(tok[2], lineno);
            m = parse_int(tok[3], lineno);
            if (n < 0 || m < 0 || n > 100000000) {
                fail(lineno, "bad vertex or edge count");
            }
            have_header = true;
            continue;
        }
        if (tok[0] == "e") {
            if (!have_header) {
                fail(lineno, "edge before header");
            }
            if (tok.size() != 3 && tok.size() != 4) {
                fail(lineno, "expected 'e <u> <v> [color|*]'");
            }
            Vertex u = parse_vertex(tok[1], static_cast<int>(n), lineno);
            Vertex v = parse_vertex(tok[2], static_cast<int>(n), lineno);
            Color c = kUnassigned;
            if (tok.size() == 4 && tok[3] != "*") {
                long long x = parse_int(tok[3], lineno);
                if (x < 0 || x > 1000000000) {
                    fail(lineno, "color must be a nonnegative integer");
                }
                c = static_cast<Color>(x);
                ++colored;
            } else {
                ++starred;
            }
            edge_list.emplace_back(u, v);
            raw_colors.push_back(c);
            continue;
        }
        fail(lineno, "unrecognized line '" + line + "'");
    }
    if (!have_header) {
        throw ParseError("missing 'p graph' header");
    }
    if (static_cast<long long>(edge_list.size()) != m) {
        throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(edge_list.size()));
    }
    try {
        file.graph = Graph(static_cast<int>(n), edge_list);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
    file.coloring = PartialEdgeColoring::unassigned(file.graph.num_edges());
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        EdgeId e = *file.graph.edge_index(edge_list[i].first, edge_list[i].second);
        file.coloring.colors[static_cast<std::size_t>(e)] = raw_colors[i];
    }
    if (colored == 0) {
        file.kind = ColoringKind::Uncolored;
    } else if (starred == 0) {
        file.kind = ColoringKind::Colored;
    } else {
        file.kind = ColoringKind::Partial;
    }
    return file;
}

GraphFile parse_graph_text(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

GraphFile read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
    out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    write_comments(out, comments);
    write_edges(out, g, nullptr);
}

void write_graph(std::ostream& out, const Graph& g, const EdgeColoring& chi, const std::vector<std::string>& comments) {
    check_coloring(g, chi);
    out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    write_comments(out, comments);
    write_edges(out, g, &chi.colors);
}

void write_graph(std::ostream& out, const Graph& g, const PartialEdgeColoring& chi,
                 const std::vector<std::string>& comments) {
    check_coloring(g, chi);
    out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    write_comments(out, comments);
    write_edges(out, g, &chi.colors);
}

std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

std::string graph_to_string(const Graph& g, const EdgeColoring& chi) {
    std::ostringstream os;
    write_graph(os, g, chi);
    return os.str();
}

// ---------------------------------------------------------------------------

PairSet parse_pairs(std::istream& in, int n) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment(line)) {
            continue;
        }
        auto tok = split(line);
        if (tok.empty()) {
            continue;
        }
        if (tok.size() != 2) {
            fail(lineno, "expected '<u> <v>'");
        }
        Vertex u = parse_vertex(tok[0], n, lineno);
        Vertex v = parse_vertex(tok[1], n, lineno);
        if (u == v) {
            fail(lineno, "pair repeats vertex " + tok[0]);
        }
        pairs.emplace_back(u, v);
    }
    return PairSet(n, pairs);
}

PairSet read_pairs_file(const std::string& path, int n) {
    auto in = open_input(path);
    return parse_pairs(in, n);
}

void write_pairs(std::ostream& out, const PairSet& pairs) {
    for (const auto& p : pairs.pairs()) {
        out << p.u + 1 << ' ' << p.v + 1 << '\n';
    }
}

Partition parse_partition(std::istream& in, int n) {
    std::string line;
    std::size_t lineno = 0;
    std::map<long long, std::vector<Vertex>> by_id;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = split(line);
        if (tok.empty()) {
            continue;
        }
        if (tok[0] != "c" || tok.size() < 3) {
            fail(lineno, "expected 'c <class-id> <v1> ...'");
        }
        long long id = parse_int(tok[1], lineno);
        if (by_id.count(id) != 0) {
            fail(lineno, "duplicate class id " + tok[1]);
        }
        auto& cls = by_id[id];
        for (std::size_t i = 2; i < tok.size(); ++i) {
            cls.push_back(parse_vertex(tok[i], n, lineno));
        }
    }
    std::vector<std::vector<Vertex>> classes;
    for (auto& [id, cls] : by_id) {
        classes.push_back(std::move(cls));
    }
    try {
        return Partition(n, std::move(classes));
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

Partition read_partition_file(const std::string& path, int n) {
    auto in = open_input(path);
    return parse_partition(in, n);
}

void write_partition(std::ostream& out, const Partition& pi) {
    for (int i = 0; i < pi.num_classes(); ++i) {
        out << "c " << i + 1;
        for (Vertex v : pi.classes()[static_cast<std::size_t>(i)]) {
            out << ' ' << v + 1;
        }
        out << '\n';
    }
}

}  // namespace rainbow
