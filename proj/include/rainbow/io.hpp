#pragma once

// Line-oriented text formats. Vertices are 1-based on disk, 0-based in memory.
//
//   graph:      p graph <n> <m>
//               e <u> <v> [<color> | *]     (m lines)
//               c <free text>               (comments, anywhere)
//   pairs:      <u> <v>                     (one pair per line)
//   partition:  c <class-id> <v1> <v2> ...  (one class per line)

#include <iosfwd>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Raised for malformed input files; the message carries the line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ColoringKind { Uncolored, Partial, Colored };

struct GraphFile {
    Graph graph;
    PartialEdgeColoring coloring;  // all kUnassigned when uncolored
    ColoringKind kind = ColoringKind::Uncolored;
    std::vector<std::string> comments;  // text after "c ", in file order

    /// Throws GraphError unless every edge is colored.
    EdgeColoring total_coloring() const { return coloring.to_total(); }
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph_text(const std::string& text);
GraphFile read_graph_file(const std::string& path);

/// Canonical edge order, so identical inputs give identical bytes.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
void write_graph(std::ostream& out, const Graph& g, const EdgeColoring& chi,
                 const std::vector<std::string>& comments = {});
void write_graph(std::ostream& out, const Graph& g, const PartialEdgeColoring& chi,
                 const std::vector<std::string>& comments = {});

std::string graph_to_string(const Graph& g);
std::string graph_to_string(const Graph& g, const EdgeColoring& chi);

PairSet parse_pairs(std::istream& in, int n);
PairSet read_pairs_file(const std::string& path, int n);
void write_pairs(std::ostream& out, const PairSet& pairs);

/// Classes are ordered by class id.
Partition parse_partition(std::istream& in, int n);
Partition read_partition_file(const std::string& path, int n);
void write_partition(std::ostream& out, const Partition& pi);

}  // namespace rainbow
