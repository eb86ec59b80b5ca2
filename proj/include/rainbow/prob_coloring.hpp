#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Random colorings

/// Edge e gets floor(counter_hash(seed, e) * k / 2^64).
EdgeColoring random_k_coloring(const Graph& g, int k, std::uint64_t seed);

struct LasVegasResult {
    std::optional<EdgeColoring> coloring;  // only ever a verified coloring
    int iterations = 0;                    // colorings tried
};

/// Random 3-colorings with seeds counter_hash(seed, i), i = 0, 1, ..., until
/// one verifies or max_iters is spent.
LasVegasResult las_vegas_rc3(const Graph& g, std::uint64_t seed, int max_iters);

// ---------------------------------------------------------------------------
// Pair evidence for diameter-2 graphs

/// Raised when a graph handed to the diameter-2 machinery has a pair at
/// distance three or more.
class DiameterViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class EvidenceCase { Adjacent, CommonNeighbors, ViaB };

/// Why a non-adjacent pair u, v is likely rainbow connected under a random
/// 3-coloring.
///
/// CommonNeighbors: the 2-paths u-w-v over `common` are edge-disjoint.
/// ViaB: a_set = N(u) \ N(v), b_set = N(v) \ N(u), and for each x in a_set
/// the path u-x-b(x)-v, b(x) = b_of[i]. b(x) is the least neighbor of x in
/// b_set, or, when x has none, its least neighbor among the common
/// neighbors. Paths may share their last edge b(x)-v; all other edges are
/// distinct. The common-neighbor 2-paths are kept as extra evidence.
struct CaseEvidence {
    VertexPair pair;
    EvidenceCase kind = EvidenceCase::Adjacent;
    std::vector<Vertex> common;
    std::vector<Vertex> a_set;
    std::vector<Vertex> b_set;
    std::vector<Vertex> b_of;  // parallel to a_set
};

/// ceil(2 log2 n), the common-neighbor threshold used by default.
int default_common_threshold(int n);

/// Throws DiameterViolation when the pair cannot be at distance <= 2.
CaseEvidence pair_evidence(const Graph& g, Vertex u, Vertex v, int threshold);

// ---------------------------------------------------------------------------
// Derandomization by conditional expectations

/// Called after each edge is fixed: edge, chosen color, estimator total.
using TraceFn = std::function<void(EdgeId, Color, double)>;

struct DerandResult {
    EdgeColoring coloring;
    double initial_estimator = 0.0;
    double final_estimator = 0.0;
    bool verified = false;
    /// The total never rose by more than floating-point noise
    /// (1e-12 relative) at any edge step.
    bool monotone = true;
    double max_step_increase = 0.0;
};

/// 3-coloring of a diameter-2 graph. Each non-adjacent pair carries the exact
/// conditional probability, given the colors fixed so far, that none of its
/// evidence paths is rainbow. Edges are fixed in canonical order, each to the
/// color in {0,1,2} minimizing the summed estimator (least id on ties).
/// Throws DiameterViolation if the diameter exceeds 2.
DerandResult derand_rc3(const Graph& g, std::optional<int> threshold = std::nullopt, const TraceFn& trace = {});

// ---------------------------------------------------------------------------
// Matchings and path families

/// Scans the edges in lexicographic order and keeps each one whose endpoints
/// are both still free, which is the same as repeatedly taking the least
/// remaining edge and deleting everything touching it. Yields at least
/// |E| / (a_size + b_size) edges.
std::vector<std::pair<int, int>> greedy_matching(int a_size, int b_size, std::vector<std::pair<int, int>> edges);

struct PathFamily {
    VertexPair pair;
    std::vector<std::vector<Vertex>> paths;  // each from pair.u to pair.v
};

inline constexpr int kDefaultPathEnumerationCap = 10000;

/// Greedy edge-disjoint family: simple u-v paths of at most max_len edges in
/// order of length, then lexicographic vertex sequence; a path is kept when it
/// shares no edge with those kept before. At most `cap` paths are examined.
PathFamily path_family(const Graph& g, Vertex u, Vertex v, int max_len = 4, int cap = kDefaultPathEnumerationCap);

bool is_valid_path_family(const Graph& g, const PathFamily& family, int max_len);

// ---------------------------------------------------------------------------
// Within-class coloring over eight colors, and the tree composition

/// Colors 0..3 are the a-colors, 4..7 the b-colors.
inline constexpr int kPaletteSize = 8;
inline constexpr int kHalfPalette = 4;

/// Colors g with the 8-color palette so that, ideally, every pair inside a
/// class is joined by a rainbow path over a-colors and by one over b-colors.
/// Per pair the estimator is P(no family path a-rainbow) + P(no family path
/// b-rainbow), computed exactly over edge-disjoint length <= 4 families.
/// `verified` reports the outcome of the exact check.
DerandResult derand_8_coloring(const Graph& g, const Partition& pi, const TraceFn& trace = {});

/// Pairs inside a class that are both a- and b-rainbow connected under chi.
bool classes_split_rainbow_connected(const Graph& g, const EdgeColoring& chi, const Partition& pi);

/// Tree touching every class: starts at the least vertex of the first class
/// and repeatedly attaches, by a shortest path, the nearest vertex of a class
/// not yet touched (least vertex on ties). Has at most k * diam + 1 vertices.
/// Edges are returned in attachment order.
std::vector<Edge> connecting_tree(const Graph& g, const Partition& pi);

/// Tree edge i is recolored 8 + i; every other edge keeps its color.
EdgeColoring compose_tree_refinement(const Graph& g, const EdgeColoring& chi8, const std::vector<Edge>& tree);

struct PipelineResult {
    std::optional<EdgeColoring> coloring;  // rainbow connected, when present
    DerandResult within_classes;
    std::vector<Edge> tree;
};

/// derand_8_coloring, then connecting_tree and compose_tree_refinement when
/// the within-class coloring verified. The final coloring is checked again
/// before it is returned.
PipelineResult partition_coloring_pipeline(const Graph& g, const Partition& pi, const TraceFn& trace = {});

}  // namespace rainbow
