#include "simdis/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace simdis {
namespace presets {
namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

Region unit_triangle() {
    return Region::polygon({{0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3 / 2.0}});
}

Region unit_square() {
    return Region::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
}

void require_r(const std::string& name, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw GeometryError("preset " + name + ": r must lie in (0,1)");
}

}  // namespace

double solve_high_phi() {
    // Newton iteration on x^3 - 2x^2 + x - 1 from x0 = 1.8
    double x = 1.8;
    for (int i = 0; i < 64; ++i) {
        double fx = ((x - 2.0) * x + 1.0) * x - 1.0;
        double dfx = (3.0 * x - 4.0) * x + 1.0;
        double step = fx / dfx;
        x -= step;
        if (std::abs(step) < 1e-16) break;
    }
    return x;
}

AlgebraicConstants constants() {
    AlgebraicConstants c;
    c.golden_threshold = (std::sqrt(5.0) - 1.0) / 2.0;
    c.high_phi = solve_high_phi();
    c.inv_high_phi = 1.0 / c.high_phi;
    return c;
}

const std::vector<std::string> kPresetNames = {
    "exa4",      "exagold",  "exaflip",     "exasquare", "exaoutside",
    "exanodis",  "scherer",  "rectangle",   "star_single"};

bool is_parametric(const std::string& name) {
    return name == "exa4" || name == "exagold" || name == "exaflip" ||
           name == "exasquare" || name == "exaoutside" || name == "exanodis" ||
           name == "rectangle";
}

double threshold(const std::string& name) {
    if (name == "exa4") return 0.5;
    if (name == "exagold") return (std::sqrt(5.0) - 1.0) / 2.0;
    if (name == "exaflip" || name == "exasquare" || name == "exaoutside")
        return 1.0 / solve_high_phi();
    throw GeometryError("no threshold for preset " + name);
}

Preset build(const std::string& name, double r) {
    Preset p;
    p.name = name;
    p.r = r;

    if (name == "exa4" || name == "exagold") {
        require_r(name, r);
        p.domain = unit_triangle();
        p.family.label = name;
        p.family.maps.emplace_back(r, 2.0 * kPi / 3.0, false, Vec2{r, 0.0});
        p.family.maps.emplace_back(r, 4.0 * kPi / 3.0, false,
                                   Vec2{1.0 - r / 2.0, r * kSqrt3 / 2.0});
        if (name == "exa4") {
            p.valid_hi = 0.5;
            p.checker = TheoremId::InsideNonOverlapping;
        } else {
            p.valid_hi = (std::sqrt(5.0) - 1.0) / 2.0;
            p.checker = TheoremId::MainWithY;
            // base vertices chosen so that f1(Y), f2(Y) tile the bottom
            // corners exactly up to Y's base; this makes the overlap of
            // f1(C), f2(C) vanish precisely for r^2 + r - 1 <= 0
            double a = r / (2.0 * (1.0 + r));
            p.seed_y = Region::polygon({{a, kSqrt3 * a},
                                        {1.0 - a, kSqrt3 * a},
                                        {0.5, kSqrt3 / 2.0}});
        }
        return p;
    }

    if (name == "exaflip") {
        require_r(name, r);
        p.domain = unit_triangle();
        p.family.label = name;
        p.family.maps.emplace_back(r, kPi / 3.0, true, Vec2{0.0, 0.0});
        p.family.maps.emplace_back(r, 4.0 * kPi / 3.0, false,
                                   Vec2{1.0 - r / 2.0, r * kSqrt3 / 2.0});
        p.valid_hi = 1.0 / solve_high_phi();
        p.checker = TheoremId::MainWithY;
        p.seed_y = Region::polygon({{r / 2.0, r * kSqrt3 / 2.0},
                                    {1.0 - r / 2.0, r * kSqrt3 / 2.0},
                                    {0.5, kSqrt3 / 2.0}});
        return p;
    }

    if (name == "exasquare") {
        require_r(name, r);
        p.domain = unit_square();
        p.family.label = name;
        p.family.maps.emplace_back(r, 0.0, false, Vec2{0.0, 0.0});
        p.family.maps.emplace_back(r, 3.0 * kPi / 2.0, false, Vec2{1.0 - r, 1.0});
        p.valid_hi = 1.0 / solve_high_phi();
        p.checker = TheoremId::MainWithY;
        // seed_y stays unset: Y = closure(D \ Phi(D)) is computed on demand
        return p;
    }

    if (name == "exaoutside") {
        require_r(name, r);
        p.domain = unit_triangle();
        p.family.label = name;
        // -r * p + t is the ratio-r point reflection, i.e. rotation by pi;
        // this is the map whose image leaves D for r > 1/2
        p.family.maps.emplace_back(r, kPi, false,
                                   Vec2{3.0 * r / 2.0, r * kSqrt3 / 2.0});
        p.family.maps.emplace_back(r, 4.0 * kPi / 3.0, false,
                                   Vec2{r / 2.0, r * kSqrt3 / 2.0});
        p.valid_hi = 1.0 / solve_high_phi();
        p.checker = TheoremId::OutsideCorollary;
        return p;
    }

    if (name == "exanodis") {
        require_r(name, r);
        p.domain = unit_triangle();
        p.family.label = name;
        p.family.maps.emplace_back(r, 4.0 * kPi / 3.0, false,
                                   Vec2{r / 2.0, r * kSqrt3 / 2.0});
        p.family.maps.emplace_back(r, 2.0 * kPi / 3.0, false, Vec2{1.0, 0.0});
        // no dissection exists for r > 1/2; the checker exhibits the overlap
        p.valid_lo = 0.0;
        p.valid_hi = 0.5;
        p.checker = TheoremId::OutsideCorollary;
        return p;
    }

    if (name == "scherer") {
        p.r = 0.5;
        p.domain = unit_triangle();
        p.family.label = name;
        // the two ratio-1/2 similarities reconstructed from the piece layout:
        // both are indirect (mirror) maps
        p.family.maps.emplace_back(0.5, 0.0, true, Vec2{1.0 / 12.0, kSqrt3 / 4.0});
        p.family.maps.emplace_back(0.5, kPi, true, Vec2{0.5, 0.0});
        p.valid_lo = 0.5;
        p.valid_hi = 0.5;
        p.checker = TheoremId::DissectionVerify;
        p.known_generator = Region::polygon({{1.0 / 3.0, 0.0},
                                             {1.0, 0.0},
                                             {0.5, kSqrt3 / 2.0},
                                             {0.25, kSqrt3 / 4.0},
                                             {7.0 / 12.0, kSqrt3 / 4.0}});
        return p;
    }

    if (name == "rectangle") {
        require_r(name, r);
        // D = [0, 1+2r^2] x [0, r]; generator X = [0,1] x [0,r]; the two
        // small pieces are quarter-turned copies standing to its right
        double w = 1.0 + 2.0 * r * r;
        p.domain = Region::polygon({{0.0, 0.0}, {w, 0.0}, {w, r}, {0.0, r}});
        p.family.label = name;
        p.family.maps.emplace_back(r, kPi / 2.0, false, Vec2{1.0 + r * r, 0.0});
        p.family.maps.emplace_back(r, kPi / 2.0, false, Vec2{w, 0.0});
        p.checker = TheoremId::DissectionVerify;
        p.known_generator =
            Region::polygon({{0.0, 0.0}, {1.0, 0.0}, {1.0, r}, {0.0, r}});
        return p;
    }

    if (name == "star_single") {
        p.r = std::sqrt(0.5);
        p.domain = unit_triangle();
        p.family.label = name;
        p.family.maps.emplace_back(std::sqrt(0.5), 5.0 * kPi / 8.0, false,
                                   Vec2{0.8, 0.0});
        p.checker = TheoremId::InsideNonOverlapping;
        p.valid_lo = 0.0;
        p.valid_hi = 1.0;
        return p;
    }

    throw GeometryError("unknown preset: " + name);
}

Preset build_star(const Region& domain, double a) {
    if (!(a > 1.0)) throw GeometryError("star preset requires a > 1");
    if (domain.empty()) throw GeometryError("star preset requires a domain");
    // heuristic star-shape probe: the segment from the origin to each
    // boundary vertex must stay inside
    for (const auto& ring : domain.rings())
        for (Vec2 v : ring)
            for (int k = 1; k < 16; ++k) {
                Vec2 q = v * (static_cast<double>(k) / 16.0);
                if (!contains_point(domain, q) &&
                    !contains_point(domain, {q.x + 1e-12, q.y + 1e-12}))
                    throw GeometryError(
                        "star preset domain does not look star-shaped about the origin");
            }
    Preset p;
    p.name = "star";
    p.r = 1.0 / std::sqrt(a);
    p.domain = domain;
    p.family.label = "star";
    p.family.maps.emplace_back(p.r, 0.0, false, Vec2{0.0, 0.0});
    p.checker = TheoremId::InsideNonOverlapping;
    return p;
}

}  // namespace presets
}  // namespace simdis
