#pragma once

#include <cstdint>
#include <optional>

#include "rainbow/graph.hpp"

namespace rainbow {

/// rc(G) with a coloring that uses exactly `rc` colors and makes G rainbow
/// connected.
struct RcResult {
    int rc = 0;
    EdgeColoring witness;
};

struct SearchStats {
    std::uint64_t nodes = 0;  // color assignments tried
};

// All searches below are exact and exponential. Practical scale is a few
// dozen edges for budgets of two or three colors, and roughly 18 edges for
// budgets up to four.

/// A coloring with at most k colors making g rainbow connected, if one exists.
/// Backtracks over edges in canonical order; edge i may use a color at most
/// one above the largest color used on earlier edges. A branch is cut as soon
/// as some vertex pair has lost every candidate path of length <= k.
std::optional<EdgeColoring> decide_rc_k(const Graph& g, int k, SearchStats* stats = nullptr);

/// Tries k = max(diameter, 1), ... up to k_max (default n - 1). Returns
/// nullopt when the cap is exceeded. Graphs with at most one vertex have rc 0.
std::optional<RcResult> rc_exact(const Graph& g, std::optional<int> k_max = std::nullopt,
                                 SearchStats* stats = nullptr);

/// 2-coloring in which every pair of `pairs` is rainbow connected.
std::optional<EdgeColoring> subset_rc2(const Graph& g, const PairSet& pairs, SearchStats* stats = nullptr);

/// Completion of a partial {0,1}-coloring that makes g rainbow connected.
std::optional<EdgeColoring> extend_rc2(const Graph& g, const PartialEdgeColoring& partial,
                                       SearchStats* stats = nullptr);

/// Spanning-tree edges get colors 0..n-2 in canonical order; the rest get 0.
EdgeColoring tree_coloring(const Graph& g);

}  // namespace rainbow
