#include "simdis/ifs.hpp"

#include <cmath>

namespace simdis {

double Family::area_factor() const {
    double s = 0.0;
    for (const auto& m : maps) s += m.ratio() * m.ratio();
    return s;
}

double Family::max_ratio() const {
    double r = 0.0;
    for (const auto& m : maps) r = std::max(r, m.ratio());
    return r;
}

Family composed_square(const Family& f) {
    Family out;
    out.label = f.label.empty() ? "composed" : f.label + " composed";
    for (const auto& a : f.maps)
        for (const auto& b : f.maps) out.maps.push_back(compose(a, b));
    return out;
}

Region phi(const Family& f, const Region& r) {
    if (f.maps.empty()) throw GeometryError("family must contain at least one map");
    if (r.empty()) return Region();
    std::vector<Region> images;
    images.reserve(f.maps.size());
    for (const auto& m : f.maps) images.push_back(transform(m, r));
    return union_all(images);
}

Region phi_pow(const Family& f, const Region& r, int n, const Limits& limits) {
    if (n < 0) throw GeometryError("phi_pow exponent must be >= 0");
    if (n > limits.depth_cap)
        throw ResourceError("phi_pow exponent exceeds depth cap");
    Region cur = r;
    for (int i = 0; i < n; ++i) {
        cur = phi(f, cur);
        if (cur.ring_count() > limits.piece_cap)
            throw ResourceError("phi_pow piece count exceeds cap");
    }
    return cur;
}

AttractorApprox attractor_points(const Family& f, int depth, Vec2 seed,
                                 const Limits& limits) {
    if (f.maps.empty()) throw GeometryError("family must contain at least one map");
    if (depth < 1) throw GeometryError("attractor depth must be >= 1");
    double total = std::pow(static_cast<double>(f.maps.size()), depth);
    if (total > static_cast<double>(limits.piece_cap))
        throw ResourceError("attractor point count exceeds cap");

    std::vector<Vec2> cur{seed};
    std::vector<Vec2> next;
    for (int d = 0; d < depth; ++d) {
        next.clear();
        next.reserve(cur.size() * f.maps.size());
        for (const auto& m : f.maps)
            for (Vec2 p : cur) next.push_back(m(p));
        std::swap(cur, next);
    }

    // E lies in the ball around seed of radius max|f_i(seed)-seed|/(1-r_max);
    // depth applications of the maps shrink the residual by r_max^depth.
    double reach = 0.0;
    for (const auto& m : f.maps) reach = std::max(reach, dist(m(seed), seed));
    double rmax = f.max_ratio();
    AttractorApprox out;
    out.points = std::move(cur);
    out.depth = depth;
    out.diameter_bound = std::pow(rmax, depth) * reach / (1.0 - rmax);
    return out;
}

bool attractor_null_test(const Family& f, const Region& /*d*/, const Tolerance& /*tol*/) {
    return f.area_factor() < 1.0;
}

Region condensation_attractor(const Family& f, const Region& a, const Tolerance& eps,
                              const Limits& limits, int depth_override) {
    if (a.empty()) throw GeometryError("condensation set must be non-empty");
    if (f.maps.empty()) throw GeometryError("family must contain at least one map");

    double q = f.area_factor();
    int depth;
    if (depth_override >= 0) {
        depth = depth_override;
    } else {
        if (q >= 1.0)
            throw GeometryError(
                "area factor >= 1: geometric tail bound diverges, supply a depth override");
        // smallest N with q^N * area(A) / (1-q) <= area_eps
        double area_a = a.area();
        depth = 0;
        double tail = area_a / (1.0 - q);
        while (tail > eps.area_eps && depth < limits.depth_cap) {
            tail *= q;
            ++depth;
        }
        // and r_max^N * diam(A) <= hausdorff_eps
        double rmax = f.max_ratio();
        double h = a.diameter();
        int hdepth = 0;
        while (h > eps.hausdorff_eps && hdepth < limits.depth_cap) {
            h *= rmax;
            ++hdepth;
        }
        depth = std::max(depth, hdepth);
    }
    if (depth > limits.depth_cap)
        throw ResourceError("condensation depth exceeds cap");

    // Accumulate the raw rings of A, Phi(A), ..., Phi^N(A) and run a single
    // union at the end; per-stage unions would rescan the whole accumulated
    // set each iteration.
    Region base = regularize(a);
    std::vector<std::vector<Vec2>> all(base.rings());
    std::vector<std::vector<Vec2>> stage = base.rings();
    for (int n = 1; n <= depth; ++n) {
        std::vector<std::vector<Vec2>> next;
        next.reserve(stage.size() * f.maps.size());
        for (const auto& m : f.maps) {
            for (const auto& ring : stage) {
                std::vector<Vec2> img(ring.size());
                for (std::size_t i = 0; i < ring.size(); ++i) img[i] = m(ring[i]);
                if (m.reflect()) std::reverse(img.begin(), img.end());
                next.push_back(std::move(img));
            }
        }
        stage = std::move(next);
        if (all.size() + stage.size() > limits.piece_cap)
            throw ResourceError("condensation piece count exceeds cap");
        all.insert(all.end(), stage.begin(), stage.end());
    }
    return Region::from_rings(all);
}

}  // namespace simdis
