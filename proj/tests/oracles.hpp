// Test-only oracles, independent of the clipping pipeline: a scanline
// rasterizer that evaluates boolean ops pointwise on the raw input rings,
// and a brute-force boundary Hausdorff scan.
#ifndef SIMDIS_TESTS_ORACLES_HPP
#define SIMDIS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "simdis/geometry.hpp"

namespace oracles {

using Rings = std::vector<std::vector<simdis::Vec2>>;

inline Rings rings_of(const simdis::Region& r) { return r.rings(); }

// even-odd inside intervals of a horizontal line at height y
inline std::vector<double> row_crossings(const Rings& rings, double y) {
    std::vector<double> xs;
    for (const auto& ring : rings) {
        for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
            simdis::Vec2 a = ring[i], b = ring[(i + 1) % n];
            if ((a.y > y) != (b.y > y))
                xs.push_back(a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x));
        }
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

inline bool inside_crossings(const std::vector<double>& xs, double x) {
    std::size_t k = std::upper_bound(xs.begin(), xs.end(), x) - xs.begin();
    return (k % 2) == 1;
}

enum class RasterOp { Union, Intersection, Difference, Single };

// Number of res x res pixel centers over [0,1]^2 for which "a op b" holds,
// evaluated pointwise with even-odd membership per input. Membership is
// constant between crossings, so pixels are counted per interval.
inline std::int64_t raster_count(const Rings& a, const Rings& b, RasterOp op,
                                 int res) {
    std::int64_t count = 0;
    std::vector<double> cuts;
    for (int row = 0; row < res; ++row) {
        double y = (row + 0.5) / res;
        auto xa = row_crossings(a, y);
        auto xb = op == RasterOp::Single ? std::vector<double>{} : row_crossings(b, y);
        cuts.clear();
        cuts.push_back(0.0);
        cuts.insert(cuts.end(), xa.begin(), xa.end());
        cuts.insert(cuts.end(), xb.begin(), xb.end());
        cuts.push_back(1.0);
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
            double l = std::max(0.0, cuts[s]);
            double r = std::min(1.0, cuts[s + 1]);
            if (!(r > l)) continue;
            double x = 0.5 * (l + r);
            bool ina = inside_crossings(xa, x);
            bool keep = false;
            switch (op) {
                case RasterOp::Single: keep = ina; break;
                case RasterOp::Union: keep = ina || inside_crossings(xb, x); break;
                case RasterOp::Intersection:
                    keep = ina && inside_crossings(xb, x);
                    break;
                case RasterOp::Difference:
                    keep = ina && !inside_crossings(xb, x);
                    break;
            }
            if (!keep) continue;
            // centers (i+0.5)/res in [l, r)
            auto lo = static_cast<std::int64_t>(std::ceil(l * res - 0.5));
            auto hi = static_cast<std::int64_t>(std::ceil(r * res - 0.5));
            lo = std::max<std::int64_t>(lo, 0);
            hi = std::min<std::int64_t>(hi, res);
            if (hi > lo) count += hi - lo;
        }
    }
    return count;
}

inline double raster_area(const Rings& rings, int res) {
    return static_cast<double>(raster_count(rings, {}, RasterOp::Single, res)) /
           (static_cast<double>(res) * res);
}

// brute-force symmetric Hausdorff over evenly spaced boundary samples
inline double brute_hausdorff(const simdis::Region& a, const simdis::Region& b,
                              int samples_per_side) {
    auto sample = [&](const simdis::Region& r) {
        std::vector<simdis::Vec2> pts;
        double perimeter = 0.0;
        for (const auto& ring : r.rings())
            for (std::size_t i = 0, n = ring.size(); i < n; ++i)
                perimeter += simdis::dist(ring[i], ring[(i + 1) % n]);
        double pitch = perimeter / samples_per_side;
        for (const auto& ring : r.rings()) {
            for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
                simdis::Vec2 p = ring[i], q = ring[(i + 1) % n];
                double len = simdis::dist(p, q);
                int steps = std::max(1, static_cast<int>(len / pitch));
                for (int k = 0; k < steps; ++k)
                    pts.push_back(p + (q - p) * (static_cast<double>(k) / steps));
            }
        }
        return pts;
    };
    auto pa = sample(a), pb = sample(b);
    auto directed = [](const std::vector<simdis::Vec2>& from,
                       const std::vector<simdis::Vec2>& to) {
        double worst = 0.0;
        for (auto p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (auto q : to) best = std::min(best, simdis::dist(p, q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(pa, pb), directed(pb, pa));
}

// random star-shaped polygon with up to max_vertices vertices in [0,1]^2
inline std::vector<simdis::Vec2> random_polygon(std::mt19937& rng,
                                                int max_vertices = 12) {
    std::uniform_int_distribution<int> nv(3, max_vertices);
    std::uniform_real_distribution<double> uc(0.3, 0.7);
    std::uniform_real_distribution<double> ur(0.05, 0.28);
    std::uniform_real_distribution<double> ua(0.0, 2.0 * 3.141592653589793);
    // angular gaps in [0.6, 1.0] normalized to 2*pi: every gap stays below
    // pi, so each edge stays inside its wedge and the polygon is simple for
    // any choice of radii
    std::uniform_real_distribution<double> ug(0.6, 1.0);
    int n = nv(rng);
    double cx = uc(rng), cy = uc(rng);
    std::vector<double> gaps(n);
    double total = 0.0;
    for (auto& g : gaps) {
        g = ug(rng);
        total += g;
    }
    double a = ua(rng);
    std::vector<simdis::Vec2> pts;
    for (double g : gaps) {
        double r = ur(rng);
        pts.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
        a += g * 2.0 * 3.141592653589793 / total;
    }
    return pts;
}

}  // namespace oracles

#endif
