#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using EdgeId = int;
using Color = int;

/// Raised for malformed graphs, colorings, partitions, or pair sets.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, always stored with first < second.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
    Vertex vertex;
    EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order on (min, max), so an edge's index is
/// a stable identifier used by every coloring type. Immutable after
/// construction.
class Graph {
public:
    Graph() = default;

    /// Rejects out-of-range endpoints, self-loops and duplicates.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// Neighbors of v in ascending vertex order.
    const std::vector<Neighbor>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    std::optional<EdgeId> edge_index(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adj_;
};

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

bool is_connected(const Graph& g);

/// BFS distances from source; unreachable vertices get kInfiniteDistance.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Longest shortest path; kInfiniteDistance if disconnected, 0 if n <= 1.
int diameter(const Graph& g);

/// Throws GraphError on the empty graph.
int min_degree(const Graph& g);

bool is_clique(const Graph& g);

/// BFS tree from vertex 0 with neighbors scanned in ascending order.
std::vector<EdgeId> spanning_tree(const Graph& g);

/// diameter(g) <= 3n / min_degree(g). Requires a connected graph with no
/// isolated vertex.
bool diameter_bound_check(const Graph& g);

// ---------------------------------------------------------------------------
// Colorings

/// Total edge coloring indexed by canonical edge index.
///
/// `num_colors` is the palette size: every id lies in [0, num_colors). It is
/// at least one more than the largest id in use; `distinct_colors()` counts
/// the ids that actually occur.
struct EdgeColoring {
    std::vector<Color> colors;
    int num_colors = 0;

    EdgeColoring() = default;
    explicit EdgeColoring(std::vector<Color> c);
    EdgeColoring(std::vector<Color> c, int palette);

    Color operator[](EdgeId e) const { return colors[static_cast<std::size_t>(e)]; }
    std::size_t size() const { return colors.size(); }
    int distinct_colors() const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

inline constexpr Color kUnassigned = -1;

struct PartialEdgeColoring {
    std::vector<Color> colors;  // kUnassigned for free edges

    PartialEdgeColoring() = default;
    explicit PartialEdgeColoring(std::vector<Color> c) : colors(std::move(c)) {}
    static PartialEdgeColoring unassigned(int num_edges);

    Color operator[](EdgeId e) const { return colors[static_cast<std::size_t>(e)]; }
    std::size_t size() const { return colors.size(); }
    bool is_total() const;
    int num_unassigned() const;
    /// Throws GraphError if some edge is unassigned.
    EdgeColoring to_total() const;

    friend bool operator==(const PartialEdgeColoring&, const PartialEdgeColoring&) = default;
};

/// Throws GraphError if the coloring does not cover exactly g's edges.
void check_coloring(const Graph& g, const EdgeColoring& chi);
void check_coloring(const Graph& g, const PartialEdgeColoring& chi);

// ---------------------------------------------------------------------------
// Pair sets and partitions

struct VertexPair {
    Vertex u = 0;
    Vertex v = 0;
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Set of unordered pairs, normalized to u < v, sorted and deduplicated.
class PairSet {
public:
    PairSet() = default;
    PairSet(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs);

    static PairSet all_pairs(int n);

    const std::vector<VertexPair>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }

private:
    std::vector<VertexPair> pairs_;
};

/// Disjoint nonempty classes covering 0..n-1.
class Partition {
public:
    Partition() = default;
    Partition(int n, std::vector<std::vector<Vertex>> classes);

    static Partition singletons(int n);
    static Partition whole(int n);

    int num_vertices() const { return n_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<Vertex>>& classes() const { return classes_; }
    int class_of(Vertex v) const { return class_of_[static_cast<std::size_t>(v)]; }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> classes_;
    std::vector<int> class_of_;
};

// ---------------------------------------------------------------------------
// Generators

/// SplitMix64 output at position `counter` of the stream keyed by `key`.
/// Counter-based, so results do not depend on evaluation order.
std::uint64_t counter_hash(std::uint64_t key, std::uint64_t counter);

/// Uniform double in [0, 1) from the top 53 bits of counter_hash.
double counter_uniform(std::uint64_t key, std::uint64_t counter);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph clique_graph(int n);
/// Vertex 0 is the center.
Graph star_graph(int n);
/// Sides are 0..a-1 and a..a+b-1.
Graph complete_bipartite_graph(int a, int b);
/// Pair (u, v), u < v, with lexicographic index i is kept iff
/// counter_uniform(seed, i) < p.
Graph gnp_graph(int n, double p, std::uint64_t seed);

/// Dispatch by name: cycle, path, clique, star, complete_bipartite, gnp.
/// Integer params come first; gnp reads params {n, p}.
Graph gen_named(const std::string& kind, const std::vector<double>& params, std::uint64_t seed = 0);

}  // namespace rainbow
