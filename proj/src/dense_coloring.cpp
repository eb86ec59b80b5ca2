#include <algorithm>
#include <cmath>
#include <map>

#include "estimator.hpp"
#include "rainbow/prob_coloring.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

EdgeColoring random_k_coloring(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1) {
        throw GraphError("random_k_coloring: k must be at least 1");
    }
    std::vector<Color> colors(static_cast<std::size_t>(g.num_edges()));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto wide = static_cast<unsigned __int128>(counter_hash(seed, static_cast<std::uint64_t>(e))) * static_cast<unsigned>(k);
        colors[static_cast<std::size_t>(e)] = static_cast<Color>(wide >> 64);
    }
    return EdgeColoring(std::move(colors), k);
}

LasVegasResult las_vegas_rc3(const Graph& g, std::uint64_t seed, int max_iters) {
    LasVegasResult result;
    for (int i = 0; i < max_iters; ++i) {
        result.iterations = i + 1;
        auto chi = random_k_coloring(g, 3, counter_hash(seed, static_cast<std::uint64_t>(i)));
        if (is_rainbow_connected(g, chi)) {
            result.coloring = std::move(chi);
            return result;
        }
    }
    return result;
}

int default_common_threshold(int n) {
    if (n <= 1) {
        return 0;
    }
    return static_cast<int>(std::ceil(2.0 * std::log2(static_cast<double>(n)) - 1e-9));
}

CaseEvidence pair_evidence(const Graph& g, Vertex u, Vertex v, int threshold) {
    if (!g.contains(u) || !g.contains(v) || u == v) {
        throw GraphError("pair_evidence: need two distinct vertices in range");
    }
    CaseEvidence ev;
    ev.pair = {std::min(u, v), std::max(u, v)};
    if (g.adjacent(u, v)) {
        ev.kind = EvidenceCase::Adjacent;
        return ev;
    }
    std::vector<char> near_u(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<char> near_v(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const auto& nb : g.neighbors(u)) {
        near_u[static_cast<std::size_t>(nb.vertex)] = 1;
    }
    for (const auto& nb : g.neighbors(v)) {
        near_v[static_cast<std::size_t>(nb.vertex)] = 1;
    }
    for (const auto& nb : g.neighbors(u)) {
        (near_v[static_cast<std::size_t>(nb.vertex)] ? ev.common : ev.a_set).push_back(nb.vertex);
    }
    if (static_cast<int>(ev.common.size()) >= threshold && !ev.common.empty()) {
        ev.kind = EvidenceCase::CommonNeighbors;
        ev.a_set.clear();
        return ev;
    }
    if (ev.common.empty()) {
        throw DiameterViolation("pair (" + std::to_string(u) + "," + std::to_string(v) + ") is at distance > 2");
    }
    ev.kind = EvidenceCase::ViaB;
    for (const auto& nb : g.neighbors(v)) {
        if (!near_u[static_cast<std::size_t>(nb.vertex)]) {
            ev.b_set.push_back(nb.vertex);
        }
    }
    for (Vertex x : ev.a_set) {
        Vertex in_b = -1;
        Vertex in_common = -1;
        for (const auto& nb : g.neighbors(x)) {
            if (!near_v[static_cast<std::size_t>(nb.vertex)]) {
                continue;
            }
            if (near_u[static_cast<std::size_t>(nb.vertex)]) {
                if (in_common < 0) {
                    in_common = nb.vertex;
                }
            } else if (in_b < 0) {
                in_b = nb.vertex;
            }
        }
        Vertex chosen = in_b >= 0 ? in_b : in_common;
        if (chosen < 0) {
            throw DiameterViolation("vertex " + std::to_string(x) + " is at distance > 2 from " + std::to_string(v));
        }
        ev.b_of.push_back(chosen);
    }
    return ev;
}

DerandResult derand_rc3(const Graph& g, std::optional<int> threshold, const TraceFn& trace) {
    if (diameter(g) > 2) {
        throw DiameterViolation("derand_rc3: graph diameter exceeds 2");
    }
    const int n = g.num_vertices();
    const int limit = threshold.value_or(default_common_threshold(n));
    const ColorRange all{0, 3};
    detail::ConditionalEstimator est(g.num_edges(), 3);
    auto edge = [&g](Vertex a, Vertex b) { return *g.edge_index(a, b); };

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) {
                continue;
            }
            CaseEvidence ev = pair_evidence(g, u, v, limit);
            std::vector<int> term;
            if (ev.kind == EvidenceCase::CommonNeighbors) {
                for (Vertex w : ev.common) {
                    term.push_back(est.add_component({-1, {{edge(u, w), edge(w, v)}}, all}));
                }
            } else {
                // group paths by their last edge b-v
                std::map<Vertex, std::vector<std::vector<EdgeId>>> groups;
                for (std::size_t i = 0; i < ev.a_set.size(); ++i) {
                    Vertex x = ev.a_set[i];
                    groups[ev.b_of[i]].push_back({edge(u, x), edge(x, ev.b_of[i])});
                }
                for (Vertex w : ev.common) {
                    groups[w].push_back({edge(u, w)});
                }
                for (auto& [b, paths] : groups) {
                    term.push_back(est.add_component({edge(b, v), std::move(paths), all}));
                }
            }
            est.add_pair({std::move(term)});
        }
    }

    DerandResult result = est.run(trace);
    result.verified = is_rainbow_connected(g, result.coloring).connected;
    return result;
}

}  // namespace rainbow
