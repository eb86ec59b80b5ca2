#include "rainbow/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <thread>
#include <unordered_map>

namespace rainbow {

namespace {

using Word = std::uint64_t;

// Any walk whose edges carry pairwise distinct colors uses no edge twice, and
// cutting its closed sub-walks leaves a path that is still rainbow. A color
// that appears on a single edge cannot repeat on a path, so only colors
// shared by two or more edges need to be remembered along the search.
class RainbowSearch {
public:
    RainbowSearch(const Graph& g, const EdgeColoring& chi) : g_(g), n_(g.num_vertices()) {
        check_coloring(g, chi);
        std::map<Color, int> count;
        for (Color c : chi.colors) {
            ++count[c];
        }
        std::map<Color, int> slot;
        for (auto [c, k] : count) {
            if (k >= 2) {
                slot.emplace(c, static_cast<int>(slot.size()));
            }
        }
        tracked_ = static_cast<int>(slot.size());
        edge_slot_.resize(static_cast<std::size_t>(g.num_edges()), -1);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            auto it = slot.find(chi[e]);
            if (it != slot.end()) {
                edge_slot_[static_cast<std::size_t>(e)] = it->second;
            }
        }
        colors_ = chi.colors;
    }

    int tracked_colors() const { return tracked_; }

    bool use_dp(const VerifyOptions& opt) const {
        switch (opt.algorithm) {
            case PathAlgorithm::SubsetDp:
                return true;
            case PathAlgorithm::Backtracking:
                return false;
            case PathAlgorithm::Auto:
                break;
        }
        if (tracked_ > opt.dp_color_threshold || tracked_ > 30) {
            return false;
        }
        // keep the state table under ~1 GiB
        std::size_t words = static_cast<std::size_t>((n_ + 63) / 64);
        return (std::size_t{1} << tracked_) * words <= (std::size_t{1} << 27);
    }

    int slot(EdgeId e) const { return edge_slot_[static_cast<std::size_t>(e)]; }
    Color color(EdgeId e) const { return colors_[static_cast<std::size_t>(e)]; }
    const Graph& graph() const { return g_; }
    int n() const { return n_; }

private:
    const Graph& g_;
    int n_;
    int tracked_ = 0;
    std::vector<int> edge_slot_;
    std::vector<Color> colors_;
};

// ---------------------------------------------------------------------------
// Subset DP: reach[mask] = vertices ending some rainbow walk from the source
// whose shared colors are exactly `mask`.

class SubsetDp {
public:
    explicit SubsetDp(const RainbowSearch& rs) : rs_(rs), n_(rs.n()), words_((rs.n() + 63) / 64) {
        int c = rs.tracked_colors();
        by_color_.assign(static_cast<std::size_t>(c) * n_ * words_, 0);
        free_.assign(static_cast<std::size_t>(n_) * words_, 0);
        const Graph& g = rs.graph();
        for (Vertex v = 0; v < n_; ++v) {
            for (const auto& nb : g.neighbors(v)) {
                int s = rs.slot(nb.edge);
                Word* row = s < 0 ? free_row(v) : color_row(s, v);
                row[nb.vertex / 64] |= Word{1} << (nb.vertex % 64);
            }
        }
    }

    /// Runs the DP from `source`. Stops early once `target` (if >= 0) is
    /// reached or every vertex is reached. Returns the reached set; if target
    /// was reached, `hit_mask` holds the mask where it appeared.
    std::vector<Word> run(Vertex source, Vertex target, std::size_t* hit_mask) {
        const int c = rs_.tracked_colors();
        const std::size_t masks = std::size_t{1} << c;
        reach_.assign(masks * words_, 0);
        std::vector<Word> all(static_cast<std::size_t>(words_), 0);
        std::vector<Word> full(static_cast<std::size_t>(words_), 0);
        for (Vertex v = 0; v < n_; ++v) {
            set_bit(full.data(), v);
        }
        set_bit(layer(0), source);
        std::vector<Word> next(static_cast<std::size_t>(words_));

        for (std::size_t mask = 0; mask < masks; ++mask) {
            Word* cur = layer(mask);
            if (is_empty(cur)) {
                continue;
            }
            close_free(cur);
            for (int w = 0; w < words_; ++w) {
                all[static_cast<std::size_t>(w)] |= cur[w];
            }
            if (target >= 0 && test_bit(cur, target)) {
                if (hit_mask != nullptr) {
                    *hit_mask = mask;
                }
                return all;
            }
            if (target < 0 && all == full) {
                return all;
            }
            for (int col = 0; col < c; ++col) {
                if (mask & (std::size_t{1} << col)) {
                    continue;
                }
                expand(cur, col, next.data());
                Word* dst = layer(mask | (std::size_t{1} << col));
                for (int w = 0; w < words_; ++w) {
                    dst[w] |= next[static_cast<std::size_t>(w)];
                }
            }
        }
        return all;
    }

    /// Rebuilds a walk from the source to `target` after run() hit it at `mask`.
    std::vector<Vertex> walk_to(Vertex source, Vertex target, std::size_t mask) {
        std::vector<Vertex> reversed;
        Vertex v = target;
        std::vector<Word> base(static_cast<std::size_t>(words_));
        std::vector<Word> tmp(static_cast<std::size_t>(words_));
        while (true) {
            // vertices entering this layer through a shared-color edge
            std::fill(base.begin(), base.end(), 0);
            if (mask == 0) {
                set_bit(base.data(), source);
            } else {
                for (int col = 0; col < rs_.tracked_colors(); ++col) {
                    if (mask & (std::size_t{1} << col)) {
                        expand(layer(mask ^ (std::size_t{1} << col)), col, tmp.data());
                        for (int w = 0; w < words_; ++w) {
                            base[static_cast<std::size_t>(w)] |= tmp[static_cast<std::size_t>(w)];
                        }
                    }
                }
            }
            // BFS inside the layer over single-use colors back to a base vertex
            std::vector<Vertex> parent(static_cast<std::size_t>(n_), -2);
            std::deque<Vertex> queue;
            const Word* cur = layer(mask);
            for (Vertex x = 0; x < n_; ++x) {
                if (test_bit(base.data(), x) && test_bit(cur, x)) {
                    parent[static_cast<std::size_t>(x)] = -1;
                    queue.push_back(x);
                }
            }
            while (!queue.empty() && parent[static_cast<std::size_t>(v)] == -2) {
                Vertex x = queue.front();
                queue.pop_front();
                for (const auto& nb : rs_.graph().neighbors(x)) {
                    if (rs_.slot(nb.edge) < 0 && parent[static_cast<std::size_t>(nb.vertex)] == -2 &&
                        test_bit(cur, nb.vertex)) {
                        parent[static_cast<std::size_t>(nb.vertex)] = x;
                        queue.push_back(nb.vertex);
                    }
                }
            }
            Vertex x = v;
            while (parent[static_cast<std::size_t>(x)] != -1) {
                reversed.push_back(x);
                x = parent[static_cast<std::size_t>(x)];
            }
            if (mask == 0) {
                reversed.push_back(x);
                break;
            }
            // step back across one shared-color edge
            bool stepped = false;
            for (const auto& nb : rs_.graph().neighbors(x)) {
                int s = rs_.slot(nb.edge);
                if (s >= 0 && (mask & (std::size_t{1} << s)) && test_bit(layer(mask ^ (std::size_t{1} << s)), nb.vertex)) {
                    reversed.push_back(x);
                    mask ^= std::size_t{1} << s;
                    v = nb.vertex;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) {
                // base vertex that is also the source in layer 0 is handled above
                reversed.push_back(x);
                break;
            }
        }
        std::reverse(reversed.begin(), reversed.end());
        return reversed;
    }

private:
    Word* layer(std::size_t mask) { return reach_.data() + mask * static_cast<std::size_t>(words_); }
    Word* color_row(int col, Vertex v) {
        return by_color_.data() + (static_cast<std::size_t>(col) * n_ + static_cast<std::size_t>(v)) * words_;
    }
    Word* free_row(Vertex v) { return free_.data() + static_cast<std::size_t>(v) * words_; }

    static void set_bit(Word* row, Vertex v) { row[v / 64] |= Word{1} << (v % 64); }
    static bool test_bit(const Word* row, Vertex v) { return (row[v / 64] >> (v % 64)) & 1U; }
    bool is_empty(const Word* row) const {
        for (int w = 0; w < words_; ++w) {
            if (row[w] != 0) {
                return false;
            }
        }
        return true;
    }

    void expand(const Word* set, int col, Word* out) {
        std::fill(out, out + words_, 0);
        for (int w = 0; w < words_; ++w) {
            Word bits = set[w];
            while (bits != 0) {
                Vertex v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const Word* row = color_row(col, v);
                for (int k = 0; k < words_; ++k) {
                    out[k] |= row[k];
                }
            }
        }
    }

    void close_free(Word* set) {
        std::vector<Word> frontier(set, set + words_);
        std::vector<Word> grown(static_cast<std::size_t>(words_));
        while (true) {
            std::fill(grown.begin(), grown.end(), 0);
            for (int w = 0; w < words_; ++w) {
                Word bits = frontier[static_cast<std::size_t>(w)];
                while (bits != 0) {
                    Vertex v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const Word* row = free_row(v);
                    for (int k = 0; k < words_; ++k) {
                        grown[static_cast<std::size_t>(k)] |= row[k];
                    }
                }
            }
            bool changed = false;
            for (int w = 0; w < words_; ++w) {
                Word fresh = grown[static_cast<std::size_t>(w)] & ~set[w];
                frontier[static_cast<std::size_t>(w)] = fresh;
                set[w] |= fresh;
                changed = changed || fresh != 0;
            }
            if (!changed) {
                return;
            }
        }
    }

    const RainbowSearch& rs_;
    int n_;
    int words_;
    std::vector<Word> by_color_;
    std::vector<Word> free_;
    std::vector<Word> reach_;
};

// ---------------------------------------------------------------------------
// Depth-first search over simple paths carrying the set of shared colors used.

class Backtracker {
public:
    explicit Backtracker(const RainbowSearch& rs)
        : rs_(rs),
          on_path_(static_cast<std::size_t>(rs.n()), 0),
          used_(static_cast<std::size_t>(rs.tracked_colors()), 0),
          reached_(static_cast<std::size_t>(rs.n()), false) {}

    /// Marks every vertex reachable from source; stops early at target (if
    /// >= 0) or once all vertices are reached. Returns the path to target.
    std::optional<std::vector<Vertex>> run(Vertex source, Vertex target) {
        std::fill(reached_.begin(), reached_.end(), false);
        reached_count_ = 0;
        target_ = target;
        path_.clear();
        found_.reset();
        dfs(source);
        return found_;
    }

    const std::vector<bool>& reached() const { return reached_; }

private:
    bool done() const { return found_.has_value() || (target_ < 0 && reached_count_ == rs_.n()); }

    void dfs(Vertex v) {
        on_path_[static_cast<std::size_t>(v)] = 1;
        path_.push_back(v);
        if (!reached_[static_cast<std::size_t>(v)]) {
            reached_[static_cast<std::size_t>(v)] = true;
            ++reached_count_;
        }
        if (v == target_) {
            found_ = path_;
        }
        for (const auto& nb : rs_.graph().neighbors(v)) {
            if (done()) {
                break;
            }
            if (on_path_[static_cast<std::size_t>(nb.vertex)]) {
                continue;
            }
            int s = rs_.slot(nb.edge);
            if (s >= 0 && used_[static_cast<std::size_t>(s)]) {
                continue;
            }
            if (s >= 0) {
                used_[static_cast<std::size_t>(s)] = 1;
            }
            dfs(nb.vertex);
            if (s >= 0) {
                used_[static_cast<std::size_t>(s)] = 0;
            }
        }
        path_.pop_back();
        on_path_[static_cast<std::size_t>(v)] = 0;
    }

    const RainbowSearch& rs_;
    std::vector<char> on_path_;
    std::vector<char> used_;
    std::vector<bool> reached_;
    int reached_count_ = 0;
    Vertex target_ = -1;
    std::vector<Vertex> path_;
    std::optional<std::vector<Vertex>> found_;
};

std::vector<Vertex> cut_loops(const std::vector<Vertex>& walk) {
    std::vector<Vertex> path;
    std::unordered_map<Vertex, std::size_t> where;
    for (Vertex v : walk) {
        auto it = where.find(v);
        if (it != where.end()) {
            for (std::size_t i = it->second + 1; i < path.size(); ++i) {
                where.erase(path[i]);
            }
            path.resize(it->second + 1);
            continue;
        }
        where[v] = path.size();
        path.push_back(v);
    }
    return path;
}

RainbowWitness make_witness(const RainbowSearch& rs, std::vector<Vertex> path) {
    RainbowWitness w;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        w.colors_used.push_back(rs.color(*rs.graph().edge_index(path[i], path[i + 1])));
    }
    w.path = std::move(path);
    return w;
}

std::vector<bool> to_bools(const std::vector<Word>& bits, int n) {
    std::vector<bool> out(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        out[static_cast<std::size_t>(v)] = (bits[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1U;
    }
    return out;
}

void check_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v)) {
        throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
}

// First vertex v > s not rainbow-reachable from s, or -1.
Vertex first_unreached_above(const RainbowSearch& rs, Vertex s, const VerifyOptions& options) {
    std::vector<bool> reached;
    if (rs.use_dp(options)) {
        SubsetDp dp(rs);
        reached = to_bools(dp.run(s, -1, nullptr), rs.n());
    } else {
        Backtracker bt(rs);
        bt.run(s, -1);
        reached = bt.reached();
    }
    for (Vertex v = s + 1; v < rs.n(); ++v) {
        if (!reached[static_cast<std::size_t>(v)]) {
            return v;
        }
    }
    return -1;
}

}  // namespace

std::optional<RainbowWitness> rainbow_path_exists(const Graph& g, const EdgeColoring& chi, Vertex s, Vertex t,
                                                  const VerifyOptions& options) {
    check_vertex(g, s);
    check_vertex(g, t);
    RainbowSearch rs(g, chi);
    if (s == t) {
        return make_witness(rs, {s});
    }
    if (rs.use_dp(options)) {
        SubsetDp dp(rs);
        std::size_t mask = 0;
        auto all = dp.run(s, t, &mask);
        if (!((all[static_cast<std::size_t>(t / 64)] >> (t % 64)) & 1U)) {
            return std::nullopt;
        }
        return make_witness(rs, cut_loops(dp.walk_to(s, t, mask)));
    }
    Backtracker bt(rs);
    auto path = bt.run(s, t);
    if (!path) {
        return std::nullopt;
    }
    return make_witness(rs, *path);
}

std::vector<bool> rainbow_reachable(const Graph& g, const EdgeColoring& chi, Vertex source,
                                    const VerifyOptions& options) {
    check_vertex(g, source);
    RainbowSearch rs(g, chi);
    if (rs.use_dp(options)) {
        SubsetDp dp(rs);
        return to_bools(dp.run(source, -1, nullptr), rs.n());
    }
    Backtracker bt(rs);
    bt.run(source, -1);
    return bt.reached();
}

ConnectivityReport is_rainbow_connected(const Graph& g, const EdgeColoring& chi, const VerifyOptions& options) {
    RainbowSearch rs(g, chi);
    const int n = g.num_vertices();
    ConnectivityReport report;
    auto fail_at = [&](Vertex s, Vertex v) {
        report.connected = false;
        report.failing_pair = VertexPair{s, v};
    };

    unsigned threads = std::max(1U, options.threads);
    if (threads == 1 || n < 4) {
        for (Vertex s = 0; s + 1 < n; ++s) {
            Vertex v = first_unreached_above(rs, s, options);
            if (v >= 0) {
                fail_at(s, v);
                break;
            }
        }
        return report;
    }

    // Each worker takes sources s = id, id + threads, ...; the smallest
    // failing source wins, so the answer matches the sequential scan.
    std::vector<Vertex> failure(static_cast<std::size_t>(n), -1);
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) {
        pool.emplace_back([&, id] {
            for (Vertex s = static_cast<Vertex>(id); s + 1 < n; s += static_cast<Vertex>(threads)) {
                failure[static_cast<std::size_t>(s)] = first_unreached_above(rs, s, options);
                if (failure[static_cast<std::size_t>(s)] >= 0) {
                    break;
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (Vertex s = 0; s + 1 < n; ++s) {
        if (failure[static_cast<std::size_t>(s)] >= 0) {
            fail_at(s, failure[static_cast<std::size_t>(s)]);
            break;
        }
    }
    return report;
}

bool pairs_rainbow_connected(const Graph& g, const EdgeColoring& chi, const PairSet& pairs,
                             const VerifyOptions& options) {
    RainbowSearch rs(g, chi);
    std::map<Vertex, std::vector<Vertex>> by_source;
    for (const auto& p : pairs.pairs()) {
        check_vertex(g, p.u);
        check_vertex(g, p.v);
        by_source[p.u].push_back(p.v);
    }
    for (const auto& [s, targets] : by_source) {
        std::vector<bool> reached;
        if (rs.use_dp(options)) {
            SubsetDp dp(rs);
            reached = to_bools(dp.run(s, -1, nullptr), rs.n());
        } else {
            Backtracker bt(rs);
            bt.run(s, -1);
            reached = bt.reached();
        }
        for (Vertex t : targets) {
            if (!reached[static_cast<std::size_t>(t)]) {
                return false;
            }
        }
    }
    return true;
}

bool is_refinement(const EdgeColoring& fine, const EdgeColoring& coarse) {
    if (fine.size() != coarse.size()) {
        throw GraphError("is_refinement: colorings cover " + std::to_string(fine.size()) + " and " +
                         std::to_string(coarse.size()) + " edges");
    }
    std::unordered_map<Color, Color> image;
    for (std::size_t e = 0; e < fine.size(); ++e) {
        auto [it, inserted] = image.emplace(fine.colors[e], coarse.colors[e]);
        if (!inserted && it->second != coarse.colors[e]) {
            return false;
        }
    }
    return true;
}

bool is_valid_witness(const Graph& g, const EdgeColoring& chi, Vertex s, Vertex t, const RainbowWitness& w) {
    if (w.path.empty() || w.path.front() != s || w.path.back() != t) {
        return false;
    }
    std::set<Vertex> seen(w.path.begin(), w.path.end());
    if (seen.size() != w.path.size()) {
        return false;
    }
    std::set<Color> colors;
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
        auto e = g.edge_index(w.path[i], w.path[i + 1]);
        if (!e || !colors.insert(chi[*e]).second) {
            return false;
        }
        if (i >= w.colors_used.size() || w.colors_used[i] != chi[*e]) {
            return false;
        }
    }
    return w.colors_used.size() + 1 == w.path.size();
}

}  // namespace rainbow
