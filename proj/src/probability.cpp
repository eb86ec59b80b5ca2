#include "rainbow/probability.hpp"

#include <algorithm>
#include <vector>

namespace rainbow {

Fraction rainbow_probability(std::span<const Color> edge_colors, int palette, ColorRange allowed) {
    if (palette < 1 || allowed.lo < 0 || allowed.hi > palette || allowed.lo > allowed.hi) {
        throw GraphError("rainbow_probability: bad palette or color range");
    }
    std::vector<Color> placed;
    std::uint64_t free_edges = 0;
    for (Color c : edge_colors) {
        if (c == kUnassigned) {
            ++free_edges;
            continue;
        }
        if (!allowed.contains(c) || std::find(placed.begin(), placed.end(), c) != placed.end()) {
            return Fraction{0, 1};
        }
        placed.push_back(c);
    }
    Fraction f{1, 1};
    std::int64_t choices = allowed.size() - static_cast<std::int64_t>(placed.size());
    for (std::uint64_t i = 0; i < free_edges; ++i) {
        if (choices <= 0) {
            return Fraction{0, 1};
        }
        f.num *= static_cast<std::uint64_t>(choices--);
        f.den *= static_cast<std::uint64_t>(palette);
    }
    return f;
}

}  // namespace rainbow
