#ifndef SIMDIS_PRESETS_HPP
#define SIMDIS_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "simdis/dissection.hpp"

namespace simdis {
namespace presets {

// The positive root of x^3 - 2x^2 + x - 1 ("high phi", about 1.7549),
// the square of the smallest Pisot number.
double solve_high_phi();

struct AlgebraicConstants {
    double golden_threshold;  // (sqrt(5)-1)/2
    double high_phi;
    double inv_high_phi;
};
AlgebraicConstants constants();

struct Preset {
    std::string name;
    double r = 0.0;
    Region domain;
    Family family;
    std::optional<Region> seed_y;
    // (lo, hi]: the designated checker passes for r in this range
    double valid_lo = 0.0;
    double valid_hi = 1.0;
    TheoremId checker = TheoremId::InsideNonOverlapping;
    int outside_depth = 1;  // n for the outside checker
    // fixed-dissection presets carry their generator
    std::optional<Region> known_generator;
};

extern const std::vector<std::string> kPresetNames;
bool is_parametric(const std::string& name);

Preset build(const std::string& name, double r);

// Single-map subdivision of a user-supplied star-shaped polygon centered at
// the origin into two pieces of area ratio 1:a (map ratio 1/sqrt(a), a > 1).
// Star-shapedness is probed by sampling rays only.
Preset build_star(const Region& domain, double a);

// Critical contraction ratio of a parametric preset.
double threshold(const std::string& name);

}  // namespace presets
}  // namespace simdis

#endif
