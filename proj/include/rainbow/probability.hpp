#pragma once

#include <cstdint>
#include <span>

#include "rainbow/graph.hpp"

namespace rainbow {

struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return static_cast<unsigned __int128>(a.num) * b.den == static_cast<unsigned __int128>(b.num) * a.den;
    }
};

/// Half-open range of color ids [lo, hi).
struct ColorRange {
    Color lo = 0;
    Color hi = 0;

    int size() const { return hi - lo; }
    bool contains(Color c) const { return c >= lo && c < hi; }
};

/// Probability that a path is rainbow using only colors in `allowed`, when
/// its unassigned edges (kUnassigned) are colored uniformly and independently
/// from [0, palette). With d distinct allowed colors already placed and r
/// free edges this is (A-d)(A-d-1)...(A-d-r+1) / palette^r, A = |allowed|.
Fraction rainbow_probability(std::span<const Color> edge_colors, int palette, ColorRange allowed);

inline Fraction rainbow_probability(std::span<const Color> edge_colors, int palette) {
    return rainbow_probability(edge_colors, palette, ColorRange{0, palette});
}

}  // namespace rainbow
