#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// A rainbow path: consecutive vertices adjacent, vertices pairwise distinct,
/// edge colors pairwise distinct. A single vertex is the zero-length path.
struct RainbowWitness {
    std::vector<Vertex> path;
    std::vector<Color> colors_used;  // edge colors along the path, in order

    int length() const { return static_cast<int>(path.size()) - 1; }
};

enum class PathAlgorithm {
    Auto,          // subset DP when few colors repeat, backtracking otherwise
    SubsetDp,
    Backtracking,
};

struct VerifyOptions {
    /// Auto uses subset DP when at most this many colors occur on two or more
    /// edges. Colors used by a single edge never need tracking.
    int dp_color_threshold = 22;
    PathAlgorithm algorithm = PathAlgorithm::Auto;
    /// Sources are split across threads for all-pairs checks. The answer does
    /// not depend on the thread count.
    unsigned threads = 1;
};

std::optional<RainbowWitness> rainbow_path_exists(const Graph& g, const EdgeColoring& chi, Vertex s, Vertex t,
                                                  const VerifyOptions& options = {});

/// Which vertices are joined to `source` by some rainbow path (source included).
std::vector<bool> rainbow_reachable(const Graph& g, const EdgeColoring& chi, Vertex source,
                                    const VerifyOptions& options = {});

struct ConnectivityReport {
    bool connected = true;
    std::optional<VertexPair> failing_pair;  // lexicographically first, when not connected

    explicit operator bool() const { return connected; }
};

/// Every pair joined by a rainbow path. Throws GraphError for a coloring that
/// does not match the graph.
ConnectivityReport is_rainbow_connected(const Graph& g, const EdgeColoring& chi, const VerifyOptions& options = {});

bool pairs_rainbow_connected(const Graph& g, const EdgeColoring& chi, const PairSet& pairs,
                             const VerifyOptions& options = {});

/// Equal colors under `fine` force equal colors under `coarse`.
bool is_refinement(const EdgeColoring& fine, const EdgeColoring& coarse);

/// Standalone check of a witness's invariants.
bool is_valid_witness(const Graph& g, const EdgeColoring& chi, Vertex s, Vertex t, const RainbowWitness& w);

}  // namespace rainbow
