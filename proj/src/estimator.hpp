#pragma once

// Conditional-expectation machinery shared by the derandomized colorings.
//
// A component is an event over a fixed set of edges whose conditional
// probability can be computed exactly. Components of one pair are built on
// disjoint edges, so a product of component values is the exact conditional
// probability that all of them happen. Each pair contributes a sum of such
// products. Every term is a conditional probability, so averaging over the
// next edge's color reproduces the current total and the least choice never
// raises it.

#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/prob_coloring.hpp"
#include "rainbow/probability.hpp"

namespace rainbow::detail {

/// Without a shared edge: P(paths[0] is not rainbow within `allowed`).
/// With one: every path is extended by `shared`, and the value is
/// E over the shared color of prod_paths P(path not rainbow | that color).
struct Component {
    EdgeId shared = -1;
    std::vector<std::vector<EdgeId>> paths;
    ColorRange allowed;
};

class ConditionalEstimator {
public:
    ConditionalEstimator(int num_edges, int palette);

    int add_component(Component c);
    /// A pair's value is the sum over terms of the product of their components.
    void add_pair(std::vector<std::vector<int>> terms);

    double total() const;

    /// Fixes every edge in canonical order to the color minimizing the total.
    DerandResult run(const TraceFn& trace);

    const std::vector<Color>& colors() const { return colors_; }

private:
    double evaluate_component(int ci) const;
    double evaluate_pair(int pi) const;
    double path_failure(const std::vector<EdgeId>& path, EdgeId shared, Color shared_color, ColorRange allowed) const;

    int palette_;
    std::vector<Color> colors_;
    std::vector<Component> components_;
    std::vector<double> component_value_;
    std::vector<std::vector<std::vector<int>>> pairs_;
};

}  // namespace rainbow::detail
