#include "rainbow/exact.hpp"

#include <algorithm>

#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

// Backtracking over edge colorings. Every pair that must be connected keeps
// the list of its simple paths with at most k edges; a path dies once two of
// its edges share a color, and a pair with no live path ends the branch.
// Once all edges are colored, each pair still has a fully colored live path,
// which is a rainbow path.
class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, const std::vector<VertexPair>& pairs, const PartialEdgeColoring& fixed,
                   SearchStats* stats)
        : g_(g), k_(k), fixed_(fixed), stats_(stats) {
        color_.assign(static_cast<std::size_t>(g.num_edges()), kUnassigned);
        paths_of_edge_.resize(static_cast<std::size_t>(g.num_edges()));
        for (const auto& p : pairs) {
            if (g.adjacent(p.u, p.v)) {
                continue;  // the edge itself is always a rainbow path
            }
            int pair_id = static_cast<int>(alive_.size());
            alive_.push_back(0);
            std::vector<char> on_path(static_cast<std::size_t>(g.num_vertices()), 0);
            std::vector<EdgeId> stack;
            collect_paths(p.u, p.v, pair_id, on_path, stack);
            if (alive_.back() == 0) {
                impossible_ = true;
            }
        }
    }

    std::optional<EdgeColoring> solve() {
        if (impossible_) {
            return std::nullopt;
        }
        bool any_fixed = false;
        for (EdgeId e = 0; e < g_.num_edges(); ++e) {
            Color c = fixed_[e];
            if (c == kUnassigned) {
                free_edges_.push_back(e);
                continue;
            }
            any_fixed = true;
            if (!assign(e, c)) {
                return std::nullopt;
            }
        }
        symmetric_ = !any_fixed;
        if (!search(0, -1)) {
            return std::nullopt;
        }
        return EdgeColoring(color_, std::max(k_, 1));
    }

private:
    void collect_paths(Vertex x, Vertex target, int pair_id, std::vector<char>& on_path, std::vector<EdgeId>& stack) {
        if (x == target) {
            int path_id = static_cast<int>(path_edges_.size());
            path_edges_.push_back(stack);
            path_pair_.push_back(pair_id);
            path_dead_.push_back(0);
            ++alive_[static_cast<std::size_t>(pair_id)];
            for (EdgeId e : stack) {
                paths_of_edge_[static_cast<std::size_t>(e)].push_back(path_id);
            }
            return;
        }
        if (static_cast<int>(stack.size()) == k_) {
            return;
        }
        on_path[static_cast<std::size_t>(x)] = 1;
        for (const auto& nb : g_.neighbors(x)) {
            if (!on_path[static_cast<std::size_t>(nb.vertex)]) {
                stack.push_back(nb.edge);
                collect_paths(nb.vertex, target, pair_id, on_path, stack);
                stack.pop_back();
            }
        }
        on_path[static_cast<std::size_t>(x)] = 0;
    }

    // Colors edge e and kills the paths this breaks. Returns false if some
    // pair lost its last path; the kills stay on the undo log either way.
    bool assign(EdgeId e, Color c) {
        if (stats_ != nullptr) {
            ++stats_->nodes;
        }
        color_[static_cast<std::size_t>(e)] = c;
        bool ok = true;
        for (int pid : paths_of_edge_[static_cast<std::size_t>(e)]) {
            if (path_dead_[static_cast<std::size_t>(pid)]) {
                continue;
            }
            for (EdgeId f : path_edges_[static_cast<std::size_t>(pid)]) {
                if (f != e && color_[static_cast<std::size_t>(f)] == c) {
                    path_dead_[static_cast<std::size_t>(pid)] = 1;
                    killed_.push_back(pid);
                    if (--alive_[static_cast<std::size_t>(path_pair_[static_cast<std::size_t>(pid)])] == 0) {
                        ok = false;
                    }
                    break;
                }
            }
        }
        return ok;
    }

    void undo(EdgeId e, std::size_t mark) {
        while (killed_.size() > mark) {
            int pid = killed_.back();
            killed_.pop_back();
            path_dead_[static_cast<std::size_t>(pid)] = 0;
            ++alive_[static_cast<std::size_t>(path_pair_[static_cast<std::size_t>(pid)])];
        }
        color_[static_cast<std::size_t>(e)] = kUnassigned;
    }

    bool search(std::size_t index, Color max_used) {
        if (index == free_edges_.size()) {
            return true;
        }
        EdgeId e = free_edges_[index];
        Color limit = symmetric_ ? std::min<Color>(k_ - 1, max_used + 1) : k_ - 1;
        for (Color c = 0; c <= limit; ++c) {
            std::size_t mark = killed_.size();
            if (assign(e, c) && search(index + 1, std::max(max_used, c))) {
                return true;
            }
            undo(e, mark);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    const PartialEdgeColoring& fixed_;
    SearchStats* stats_;
    bool impossible_ = false;
    bool symmetric_ = true;

    std::vector<Color> color_;
    std::vector<EdgeId> free_edges_;
    std::vector<std::vector<EdgeId>> path_edges_;
    std::vector<int> path_pair_;
    std::vector<char> path_dead_;
    std::vector<std::vector<int>> paths_of_edge_;
    std::vector<int> alive_;
    std::vector<int> killed_;
};

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) {
        throw GraphError(std::string(what) + ": graph is disconnected");
    }
}

}  // namespace

std::optional<EdgeColoring> decide_rc_k(const Graph& g, int k, SearchStats* stats) {
    require_connected(g, "decide_rc_k");
    if (k < 1) {
        throw GraphError("decide_rc_k: color budget must be at least 1");
    }
    auto pairs = PairSet::all_pairs(g.num_vertices());
    auto fixed = PartialEdgeColoring::unassigned(g.num_edges());
    auto result = ColoringSearch(g, k, pairs.pairs(), fixed, stats).solve();
    if (result) {
        result->num_colors = k;
    }
    return result;
}

std::optional<RcResult> rc_exact(const Graph& g, std::optional<int> k_max, SearchStats* stats) {
    require_connected(g, "rc_exact");
    const int n = g.num_vertices();
    if (n <= 1) {
        return RcResult{0, EdgeColoring{}};
    }
    int cap = k_max.value_or(n - 1);
    for (int k = std::max(diameter(g), 1); k <= cap; ++k) {
        if (auto chi = decide_rc_k(g, k, stats)) {
            return RcResult{k, std::move(*chi)};
        }
    }
    return std::nullopt;
}

std::optional<EdgeColoring> subset_rc2(const Graph& g, const PairSet& pairs, SearchStats* stats) {
    require_connected(g, "subset_rc2");
    for (const auto& p : pairs.pairs()) {
        if (!g.contains(p.u) || !g.contains(p.v)) {
            throw GraphError("subset_rc2: pair out of range");
        }
    }
    auto fixed = PartialEdgeColoring::unassigned(g.num_edges());
    auto result = ColoringSearch(g, 2, pairs.pairs(), fixed, stats).solve();
    if (result) {
        result->num_colors = 2;
    }
    return result;
}

std::optional<EdgeColoring> extend_rc2(const Graph& g, const PartialEdgeColoring& partial, SearchStats* stats) {
    check_coloring(g, partial);
    for (Color c : partial.colors) {
        if (c >= 2) {
            throw GraphError("extend_rc2: partial coloring uses color " + std::to_string(c));
        }
    }
    require_connected(g, "extend_rc2");
    auto pairs = PairSet::all_pairs(g.num_vertices());
    auto result = ColoringSearch(g, 2, pairs.pairs(), partial, stats).solve();
    if (result) {
        result->num_colors = 2;
    }
    return result;
}

EdgeColoring tree_coloring(const Graph& g) {
    auto tree = spanning_tree(g);  // throws when disconnected
    std::vector<Color> colors(static_cast<std::size_t>(g.num_edges()), 0);
    Color next = 0;
    for (EdgeId e : tree) {
        colors[static_cast<std::size_t>(e)] = next++;
    }
    return EdgeColoring(std::move(colors), std::max(1, next));
}

}  // namespace rainbow
