#include "rainbow/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace rainbow {

namespace {

std::string pair_text(Vertex u, Vertex v) {
    std::ostringstream os;
    os << "(" << u << "," << v << ")";
    return os.str();
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) : n_(n) {
    if (n < 0) {
        throw GraphError("negative vertex count");
    }
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw GraphError("edge " + pair_text(a, b) + " has an endpoint out of range");
        }
        if (a == b) {
            throw GraphError("edge " + pair_text(a, b) + " is a self-loop");
        }
        edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw GraphError("edge " + pair_text(dup->u, dup->v) + " is a duplicate");
    }

    adj_.assign(static_cast<std::size_t>(n), {});
    for (EdgeId e = 0; e < num_edges(); ++e) {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        adj_[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
        adj_[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end(), [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
    }
}

std::optional<EdgeId> Graph::edge_index(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v) || u == v) {
        return std::nullopt;
    }
    const auto& list = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
    if (it != list.end() && it->vertex == v) {
        return it->edge;
    }
    return std::nullopt;
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) { return Graph(n, edge_list); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kInfiniteDistance);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const auto& nb : g.neighbors(x)) {
            auto& d = dist[static_cast<std::size_t>(nb.vertex)];
            if (d == kInfiniteDistance) {
                d = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() <= 1) {
        return true;
    }
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfiniteDistance; });
}

int diameter(const Graph& g) {
    int best = 0;
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        for (int d : bfs_distances(g, s)) {
            if (d == kInfiniteDistance) {
                return kInfiniteDistance;
            }
            best = std::max(best, d);
        }
    }
    return best;
}

int min_degree(const Graph& g) {
    if (g.num_vertices() == 0) {
        throw GraphError("min_degree of the empty graph");
    }
    int best = g.degree(0);
    for (Vertex v = 1; v < g.num_vertices(); ++v) {
        best = std::min(best, g.degree(v));
    }
    return best;
}

bool is_clique(const Graph& g) {
    long long n = g.num_vertices();
    return g.num_edges() == n * (n - 1) / 2;
}

std::vector<EdgeId> spanning_tree(const Graph& g) {
    if (!is_connected(g)) {
        throw GraphError("spanning_tree: graph is disconnected");
    }
    std::vector<EdgeId> tree;
    if (g.num_vertices() == 0) {
        return tree;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    std::deque<Vertex> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const auto& nb : g.neighbors(x)) {
            if (!seen[static_cast<std::size_t>(nb.vertex)]) {
                seen[static_cast<std::size_t>(nb.vertex)] = 1;
                tree.push_back(nb.edge);
                queue.push_back(nb.vertex);
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

bool diameter_bound_check(const Graph& g) {
    if (!is_connected(g)) {
        throw GraphError("diameter_bound_check: graph is disconnected");
    }
    if (g.num_vertices() <= 1) {
        return true;
    }
    int delta = min_degree(g);
    if (delta < 1) {
        throw GraphError("diameter_bound_check: minimum degree is zero");
    }
    // diam <= 3n/delta, compared without division
    return static_cast<long long>(diameter(g)) * delta <= 3LL * g.num_vertices();
}

// ---------------------------------------------------------------------------

EdgeColoring::EdgeColoring(std::vector<Color> c) : colors(std::move(c)) {
    for (Color x : colors) {
        if (x < 0) {
            throw GraphError("negative color id");
        }
        num_colors = std::max(num_colors, x + 1);
    }
}

EdgeColoring::EdgeColoring(std::vector<Color> c, int palette) : EdgeColoring(std::move(c)) {
    if (palette < num_colors) {
        throw GraphError("color id outside the declared palette");
    }
    num_colors = palette;
}

int EdgeColoring::distinct_colors() const {
    std::set<Color> s(colors.begin(), colors.end());
    return static_cast<int>(s.size());
}

PartialEdgeColoring PartialEdgeColoring::unassigned(int num_edges) {
    return PartialEdgeColoring(std::vector<Color>(static_cast<std::size_t>(num_edges), kUnassigned));
}

bool PartialEdgeColoring::is_total() const { return num_unassigned() == 0; }

int PartialEdgeColoring::num_unassigned() const {
    return static_cast<int>(std::count(colors.begin(), colors.end(), kUnassigned));
}

EdgeColoring PartialEdgeColoring::to_total() const {
    if (!is_total()) {
        throw GraphError("coloring is partial");
    }
    return EdgeColoring(colors);
}

void check_coloring(const Graph& g, const EdgeColoring& chi) {
    if (chi.size() != static_cast<std::size_t>(g.num_edges())) {
        throw GraphError("coloring covers " + std::to_string(chi.size()) + " edges, graph has " +
                         std::to_string(g.num_edges()));
    }
    for (Color c : chi.colors) {
        if (c < 0 || c >= chi.num_colors) {
            throw GraphError("coloring is partial or has an out-of-palette color");
        }
    }
}

void check_coloring(const Graph& g, const PartialEdgeColoring& chi) {
    if (chi.size() != static_cast<std::size_t>(g.num_edges())) {
        throw GraphError("coloring covers " + std::to_string(chi.size()) + " edges, graph has " +
                         std::to_string(g.num_edges()));
    }
    for (Color c : chi.colors) {
        if (c < kUnassigned) {
            throw GraphError("negative color id");
        }
    }
}

// ---------------------------------------------------------------------------

PairSet::PairSet(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw GraphError("pair " + pair_text(a, b) + " has an endpoint out of range");
        }
        if (a == b) {
            throw GraphError("pair " + pair_text(a, b) + " repeats a vertex");
        }
        pairs_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairSet PairSet::all_pairs(int n) {
    std::vector<std::pair<Vertex, Vertex>> p;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            p.emplace_back(u, v);
        }
    }
    return PairSet(n, p);
}

Partition::Partition(int n, std::vector<std::vector<Vertex>> classes) : n_(n), classes_(std::move(classes)) {
    class_of_.assign(static_cast<std::size_t>(n), -1);
    if (classes_.empty() && n > 0) {
        throw GraphError("partition has no classes");
    }
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        auto& cls = classes_[i];
        if (cls.empty()) {
            throw GraphError("partition class " + std::to_string(i + 1) + " is empty");
        }
        std::sort(cls.begin(), cls.end());
        for (Vertex v : cls) {
            if (v < 0 || v >= n) {
                throw GraphError("partition vertex " + std::to_string(v) + " out of range");
            }
            if (class_of_[static_cast<std::size_t>(v)] != -1) {
                throw GraphError("vertex " + std::to_string(v) + " is in two partition classes");
            }
            class_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (class_of_[static_cast<std::size_t>(v)] == -1) {
            throw GraphError("vertex " + std::to_string(v) + " is not covered by the partition");
        }
    }
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<Vertex>> c;
    for (Vertex v = 0; v < n; ++v) {
        c.push_back({v});
    }
    return Partition(n, std::move(c));
}

Partition Partition::whole(int n) {
    if (n == 0) {
        return Partition(0, {});
    }
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) {
        all.push_back(v);
    }
    return Partition(n, {all});
}

// ---------------------------------------------------------------------------

std::uint64_t counter_hash(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double counter_uniform(std::uint64_t key, std::uint64_t counter) {
    return static_cast<double>(counter_hash(key, counter) >> 11) * 0x1.0p-53;
}

Graph cycle_graph(int n) {
    if (n < 3) {
        throw GraphError("cycle needs n >= 3");
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, e);
}

Graph path_graph(int n) {
    if (n < 1) {
        throw GraphError("path needs n >= 1");
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph(n, e);
}

Graph clique_graph(int n) {
    if (n < 1) {
        throw GraphError("clique needs n >= 1");
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph(n, e);
}

Graph star_graph(int n) {
    if (n < 2) {
        throw GraphError("star needs n >= 2");
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 1; i < n; ++i) {
        e.emplace_back(0, i);
    }
    return Graph(n, e);
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) {
        throw GraphError("complete_bipartite needs both sides nonempty");
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < a; ++i) {
        for (Vertex j = 0; j < b; ++j) {
            e.emplace_back(i, a + j);
        }
    }
    return Graph(a + b, e);
}

Graph gnp_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) {
        throw GraphError("gnp needs n >= 0");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw GraphError("gnp needs p in [0, 1]");
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    std::uint64_t index = 0;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++index) {
            if (counter_uniform(seed, index) < p) {
                e.emplace_back(i, j);
            }
        }
    }
    return Graph(n, e);
}

namespace {

int int_param(const std::vector<double>& params, std::size_t i, const std::string& kind) {
    if (i >= params.size()) {
        throw GraphError(kind + ": missing parameter " + std::to_string(i + 1));
    }
    double x = params[i];
    if (x != std::floor(x) || x < 0 || x > 1e7) {
        throw GraphError(kind + ": parameter " + std::to_string(i + 1) + " must be a nonnegative integer");
    }
    return static_cast<int>(x);
}

void expect_count(const std::vector<double>& params, std::size_t count, const std::string& kind) {
    if (params.size() != count) {
        throw GraphError(kind + ": expected " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
    }
}

}  // namespace

Graph gen_named(const std::string& kind, const std::vector<double>& params, std::uint64_t seed) {
    if (kind == "cycle") {
        expect_count(params, 1, kind);
        return cycle_graph(int_param(params, 0, kind));
    }
    if (kind == "path") {
        expect_count(params, 1, kind);
        return path_graph(int_param(params, 0, kind));
    }
    if (kind == "clique") {
        expect_count(params, 1, kind);
        return clique_graph(int_param(params, 0, kind));
    }
    if (kind == "star") {
        expect_count(params, 1, kind);
        return star_graph(int_param(params, 0, kind));
    }
    if (kind == "complete_bipartite") {
        expect_count(params, 2, kind);
        return complete_bipartite_graph(int_param(params, 0, kind), int_param(params, 1, kind));
    }
    if (kind == "gnp") {
        expect_count(params, 2, kind);
        return gnp_graph(int_param(params, 0, kind), params[1], seed);
    }
    throw GraphError("unknown graph kind '" + kind + "'");
}

}  // namespace rainbow
