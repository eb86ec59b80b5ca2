#include "estimator.hpp"

#include <algorithm>
#include <limits>

namespace rainbow::detail {

ConditionalEstimator::ConditionalEstimator(int num_edges, int palette)
    : palette_(palette), colors_(static_cast<std::size_t>(num_edges), kUnassigned) {}

int ConditionalEstimator::add_component(Component c) {
    components_.push_back(std::move(c));
    component_value_.push_back(evaluate_component(static_cast<int>(components_.size()) - 1));
    return static_cast<int>(components_.size()) - 1;
}

void ConditionalEstimator::add_pair(std::vector<std::vector<int>> terms) { pairs_.push_back(std::move(terms)); }

double ConditionalEstimator::path_failure(const std::vector<EdgeId>& path, EdgeId shared, Color shared_color,
                                          ColorRange allowed) const {
    Color buf[8];
    std::vector<Color> heap;
    std::size_t len = path.size() + (shared >= 0 ? 1 : 0);
    Color* cols = buf;
    if (len > 8) {
        heap.resize(len);
        cols = heap.data();
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
        cols[i] = colors_[static_cast<std::size_t>(path[i])];
    }
    if (shared >= 0) {
        cols[path.size()] = shared_color;
    }
    Fraction p = rainbow_probability(std::span<const Color>(cols, len), palette_, allowed);
    return static_cast<double>(p.den - p.num) / static_cast<double>(p.den);
}

double ConditionalEstimator::evaluate_component(int ci) const {
    const Component& c = components_[static_cast<std::size_t>(ci)];
    if (c.shared < 0) {
        return path_failure(c.paths.front(), -1, kUnassigned, c.allowed);
    }
    Color sc = colors_[static_cast<std::size_t>(c.shared)];
    auto product_for = [&](Color shared_color) {
        double prod = 1.0;
        for (const auto& p : c.paths) {
            prod *= path_failure(p, c.shared, shared_color, c.allowed);
        }
        return prod;
    };
    if (sc != kUnassigned) {
        return product_for(sc);
    }
    double sum = 0.0;
    for (Color x = 0; x < palette_; ++x) {
        sum += product_for(x);
    }
    return sum / palette_;
}

double ConditionalEstimator::evaluate_pair(int pi) const {
    double value = 0.0;
    for (const auto& term : pairs_[static_cast<std::size_t>(pi)]) {
        double prod = 1.0;
        for (int ci : term) {
            prod *= component_value_[static_cast<std::size_t>(ci)];
        }
        value += prod;
    }
    return value;
}

double ConditionalEstimator::total() const {
    double sum = 0.0;
    for (int p = 0; p < static_cast<int>(pairs_.size()); ++p) {
        sum += evaluate_pair(p);
    }
    return sum;
}

DerandResult ConditionalEstimator::run(const TraceFn& trace) {
    const int m = static_cast<int>(colors_.size());
    std::vector<std::vector<int>> components_of_edge(static_cast<std::size_t>(m));
    for (int ci = 0; ci < static_cast<int>(components_.size()); ++ci) {
        const Component& c = components_[static_cast<std::size_t>(ci)];
        std::vector<EdgeId> touched;
        if (c.shared >= 0) {
            touched.push_back(c.shared);
        }
        for (const auto& p : c.paths) {
            touched.insert(touched.end(), p.begin(), p.end());
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (EdgeId e : touched) {
            components_of_edge[static_cast<std::size_t>(e)].push_back(ci);
        }
    }
    std::vector<int> pair_of_component(components_.size(), -1);
    for (int pi = 0; pi < static_cast<int>(pairs_.size()); ++pi) {
        for (const auto& term : pairs_[static_cast<std::size_t>(pi)]) {
            for (int ci : term) {
                pair_of_component[static_cast<std::size_t>(ci)] = pi;
            }
        }
    }

    std::vector<double> pair_value(pairs_.size());
    for (int pi = 0; pi < static_cast<int>(pairs_.size()); ++pi) {
        pair_value[static_cast<std::size_t>(pi)] = evaluate_pair(pi);
    }

    DerandResult result;
    double running = total();
    result.initial_estimator = running;

    std::vector<double> saved;
    std::vector<int> pairs_hit;
    for (EdgeId e = 0; e < m; ++e) {
        const auto& comps = components_of_edge[static_cast<std::size_t>(e)];
        pairs_hit.clear();
        for (int ci : comps) {
            pairs_hit.push_back(pair_of_component[static_cast<std::size_t>(ci)]);
        }
        std::sort(pairs_hit.begin(), pairs_hit.end());
        pairs_hit.erase(std::unique(pairs_hit.begin(), pairs_hit.end()), pairs_hit.end());

        saved.resize(comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i) {
            saved[i] = component_value_[static_cast<std::size_t>(comps[i])];
        }

        Color best = 0;
        double best_delta = std::numeric_limits<double>::infinity();
        for (Color c = 0; c < palette_; ++c) {
            colors_[static_cast<std::size_t>(e)] = c;
            for (int ci : comps) {
                component_value_[static_cast<std::size_t>(ci)] = evaluate_component(ci);
            }
            double delta = 0.0;
            for (int pi : pairs_hit) {
                delta += evaluate_pair(pi) - pair_value[static_cast<std::size_t>(pi)];
            }
            if (delta < best_delta) {
                best_delta = delta;
                best = c;
            }
            for (std::size_t i = 0; i < comps.size(); ++i) {
                component_value_[static_cast<std::size_t>(comps[i])] = saved[i];
            }
            if (comps.empty()) {
                break;  // nothing depends on this edge
            }
        }

        colors_[static_cast<std::size_t>(e)] = best;
        for (int ci : comps) {
            component_value_[static_cast<std::size_t>(ci)] = evaluate_component(ci);
        }
        for (int pi : pairs_hit) {
            pair_value[static_cast<std::size_t>(pi)] = evaluate_pair(pi);
        }
        if (comps.empty()) {
            best_delta = 0.0;
        }
        result.max_step_increase = std::max(result.max_step_increase, best_delta);
        if (best_delta > 1e-12 * std::max(1.0, running)) {
            result.monotone = false;
        }
        running += best_delta;
        if (trace) {
            trace(e, best, running);
        }
    }
    result.final_estimator = total();
    result.coloring = EdgeColoring(colors_, palette_);
    return result;
}

}  // namespace rainbow::detail
