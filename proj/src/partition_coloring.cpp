#include <algorithm>
#include <deque>
#include <set>

#include "estimator.hpp"
#include "rainbow/prob_coloring.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

void require_partition_of(const Graph& g, const Partition& pi, const char* who) {
    if (pi.num_vertices() != g.num_vertices()) {
        throw GraphError(std::string(who) + ": partition has " + std::to_string(pi.num_vertices()) +
                         " vertices, graph has " + std::to_string(g.num_vertices()));
    }
}

std::vector<std::pair<Vertex, Vertex>> within_class_pairs(const Partition& pi) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& cls : pi.classes()) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                out.emplace_back(cls[i], cls[j]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Subgraph of the edges whose color lies in [lo, hi), colors kept.
std::pair<Graph, EdgeColoring> color_slice(const Graph& g, const EdgeColoring& chi, Color lo, Color hi) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Color> colors;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        Color c = chi.colors[static_cast<std::size_t>(e)];
        if (c >= lo && c < hi) {
            edges.emplace_back(g.edge(e).u, g.edge(e).v);
            colors.push_back(c);
        }
    }
    // canonical order of g is inherited, so colors stay aligned
    Graph sub(g.num_vertices(), edges);
    return {std::move(sub), EdgeColoring(std::move(colors), std::max(chi.num_colors, hi))};
}

}  // namespace

std::vector<std::pair<int, int>> greedy_matching(int a_size, int b_size, std::vector<std::pair<int, int>> edges) {
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= a_size || b < 0 || b >= b_size) {
            throw GraphError("greedy_matching: edge (" + std::to_string(a) + "," + std::to_string(b) +
                             ") out of range");
        }
    }
    std::sort(edges.begin(), edges.end());
    std::vector<char> used_a(static_cast<std::size_t>(a_size), 0);
    std::vector<char> used_b(static_cast<std::size_t>(b_size), 0);
    std::vector<std::pair<int, int>> matching;
    for (const auto& [a, b] : edges) {
        if (!used_a[static_cast<std::size_t>(a)] && !used_b[static_cast<std::size_t>(b)]) {
            used_a[static_cast<std::size_t>(a)] = 1;
            used_b[static_cast<std::size_t>(b)] = 1;
            matching.emplace_back(a, b);
        }
    }
    return matching;
}

PathFamily path_family(const Graph& g, Vertex u, Vertex v, int max_len, int cap) {
    if (!g.contains(u) || !g.contains(v) || u == v) {
        throw GraphError("path_family: need two distinct vertices in range");
    }
    PathFamily family;
    family.pair = {u, v};
    const auto dist = bfs_distances(g, v);
    std::vector<char> edge_taken(static_cast<std::size_t>(g.num_edges()), 0);
    std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<Vertex> path{u};
    std::vector<EdgeId> path_edges;
    int examined = 0;

    auto consider = [&]() {
        ++examined;
        for (EdgeId e : path_edges) {
            if (edge_taken[static_cast<std::size_t>(e)]) {
                return;
            }
        }
        for (EdgeId e : path_edges) {
            edge_taken[static_cast<std::size_t>(e)] = 1;
        }
        family.paths.push_back(path);
    };

    // exact length `len`, neighbors ascending, so paths come out lexicographically
    auto extend = [&](auto&& self, Vertex x, int len) -> void {
        if (examined >= cap) {
            return;
        }
        int depth = static_cast<int>(path_edges.size());
        if (x == v) {
            if (depth == len) {
                consider();
            }
            return;
        }
        for (const auto& nb : g.neighbors(x)) {
            int d = dist[static_cast<std::size_t>(nb.vertex)];
            if (on_path[static_cast<std::size_t>(nb.vertex)] || d == kInfiniteDistance || depth + 1 + d > len) {
                continue;
            }
            on_path[static_cast<std::size_t>(nb.vertex)] = 1;
            path.push_back(nb.vertex);
            path_edges.push_back(nb.edge);
            self(self, nb.vertex, len);
            path_edges.pop_back();
            path.pop_back();
            on_path[static_cast<std::size_t>(nb.vertex)] = 0;
            if (examined >= cap) {
                return;
            }
        }
    };

    on_path[static_cast<std::size_t>(u)] = 1;
    for (int len = 1; len <= max_len && examined < cap; ++len) {
        extend(extend, u, len);
    }
    return family;
}

bool is_valid_path_family(const Graph& g, const PathFamily& family, int max_len) {
    std::set<EdgeId> seen;
    for (const auto& p : family.paths) {
        if (p.size() < 2 || static_cast<int>(p.size()) - 1 > max_len || p.front() != family.pair.u ||
            p.back() != family.pair.v) {
            return false;
        }
        std::set<Vertex> verts(p.begin(), p.end());
        if (verts.size() != p.size()) {
            return false;
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.contains(p[i]) || !g.contains(p[i + 1])) {
                return false;
            }
            auto e = g.edge_index(p[i], p[i + 1]);
            if (!e || !seen.insert(*e).second) {
                return false;
            }
        }
    }
    return true;
}

bool classes_split_rainbow_connected(const Graph& g, const EdgeColoring& chi, const Partition& pi) {
    require_partition_of(g, pi, "classes_split_rainbow_connected");
    check_coloring(g, chi);
    PairSet pairs(g.num_vertices(), within_class_pairs(pi));
    if (pairs.empty()) {
        return true;
    }
    auto [ga, chia] = color_slice(g, chi, 0, kHalfPalette);
    if (!pairs_rainbow_connected(ga, chia, pairs)) {
        return false;
    }
    auto [gb, chib] = color_slice(g, chi, kHalfPalette, kPaletteSize);
    return pairs_rainbow_connected(gb, chib, pairs);
}

DerandResult derand_8_coloring(const Graph& g, const Partition& pi, const TraceFn& trace) {
    require_partition_of(g, pi, "derand_8_coloring");
    if (!is_connected(g)) {
        throw GraphError("derand_8_coloring: graph is not connected");
    }
    const ColorRange a_colors{0, kHalfPalette};
    const ColorRange b_colors{kHalfPalette, kPaletteSize};
    detail::ConditionalEstimator est(g.num_edges(), kPaletteSize);

    for (const auto& [u, v] : within_class_pairs(pi)) {
        PathFamily family = path_family(g, u, v);
        std::vector<int> a_term;
        std::vector<int> b_term;
        for (const auto& p : family.paths) {
            std::vector<EdgeId> edges;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                edges.push_back(*g.edge_index(p[i], p[i + 1]));
            }
            a_term.push_back(est.add_component({-1, {edges}, a_colors}));
            b_term.push_back(est.add_component({-1, {std::move(edges)}, b_colors}));
        }
        est.add_pair({std::move(a_term), std::move(b_term)});
    }

    DerandResult result = est.run(trace);
    result.verified = classes_split_rainbow_connected(g, result.coloring, pi);
    return result;
}

std::vector<Edge> connecting_tree(const Graph& g, const Partition& pi) {
    require_partition_of(g, pi, "connecting_tree");
    if (!is_connected(g)) {
        throw GraphError("connecting_tree: graph is not connected");
    }
    std::vector<Edge> tree;
    if (pi.num_classes() == 0) {
        return tree;
    }
    const int n = g.num_vertices();
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
    std::vector<char> touched(static_cast<std::size_t>(pi.num_classes()), 0);
    int untouched = pi.num_classes();
    auto add_vertex = [&](Vertex x) {
        in_tree[static_cast<std::size_t>(x)] = 1;
        int c = pi.class_of(x);
        if (!touched[static_cast<std::size_t>(c)]) {
            touched[static_cast<std::size_t>(c)] = 1;
            --untouched;
        }
    };
    add_vertex(pi.classes().front().front());

    while (untouched > 0) {
        // multi-source BFS from the current tree
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
        std::deque<Vertex> queue;
        for (Vertex x = 0; x < n; ++x) {
            if (in_tree[static_cast<std::size_t>(x)]) {
                dist[static_cast<std::size_t>(x)] = 0;
                queue.push_back(x);
            }
        }
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (const auto& nb : g.neighbors(x)) {
                if (dist[static_cast<std::size_t>(nb.vertex)] < 0) {
                    dist[static_cast<std::size_t>(nb.vertex)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(nb.vertex)] = x;
                    queue.push_back(nb.vertex);
                }
            }
        }
        Vertex target = -1;
        for (Vertex x = 0; x < n; ++x) {
            if (touched[static_cast<std::size_t>(pi.class_of(x))]) {
                continue;
            }
            if (target < 0 || dist[static_cast<std::size_t>(x)] < dist[static_cast<std::size_t>(target)]) {
                target = x;
            }
        }
        std::vector<Vertex> chain;
        for (Vertex x = target; !in_tree[static_cast<std::size_t>(x)]; x = parent[static_cast<std::size_t>(x)]) {
            chain.push_back(x);
        }
        Vertex prev = parent[static_cast<std::size_t>(chain.back())];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            tree.push_back({std::min(prev, *it), std::max(prev, *it)});
            add_vertex(*it);
            prev = *it;
        }
    }
    return tree;
}

EdgeColoring compose_tree_refinement(const Graph& g, const EdgeColoring& chi8, const std::vector<Edge>& tree) {
    check_coloring(g, chi8);
    for (Color c : chi8.colors) {
        if (c < 0 || c >= kPaletteSize) {
            throw GraphError("compose_tree_refinement: color " + std::to_string(c) + " is outside the 8-color palette");
        }
    }
    std::vector<Color> colors = chi8.colors;
    std::vector<char> seen(static_cast<std::size_t>(g.num_edges()), 0);
    for (std::size_t i = 0; i < tree.size(); ++i) {
        auto e = g.edge_index(tree[i].u, tree[i].v);
        if (!e) {
            throw GraphError("compose_tree_refinement: tree edge (" + std::to_string(tree[i].u) + "," +
                             std::to_string(tree[i].v) + ") is not in the graph");
        }
        if (seen[static_cast<std::size_t>(*e)]) {
            throw GraphError("compose_tree_refinement: tree edge (" + std::to_string(tree[i].u) + "," +
                             std::to_string(tree[i].v) + ") listed twice");
        }
        seen[static_cast<std::size_t>(*e)] = 1;
        colors[static_cast<std::size_t>(*e)] = kPaletteSize + static_cast<Color>(i);
    }
    return EdgeColoring(std::move(colors), kPaletteSize + static_cast<int>(tree.size()));
}

PipelineResult partition_coloring_pipeline(const Graph& g, const Partition& pi, const TraceFn& trace) {
    PipelineResult result;
    result.within_classes = derand_8_coloring(g, pi, trace);
    if (!result.within_classes.verified) {
        return result;
    }
    result.tree = connecting_tree(g, pi);
    EdgeColoring final_coloring = compose_tree_refinement(g, result.within_classes.coloring, result.tree);
    if (is_rainbow_connected(g, final_coloring)) {
        result.coloring = std::move(final_coloring);
    }
    return result;
}

}  // namespace rainbow
