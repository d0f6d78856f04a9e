#ifndef SIMDIS_GEOMETRY_HPP
#define SIMDIS_GEOMETRY_HPP

#include <cmath>
#include <span>
#include <vector>

#include "simdis/errors.hpp"

namespace simdis {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Contracting planar similarity p |-> ratio * R(angle) * M * p + translation,
// where M is the x-axis mirror (y -> -y) applied before the rotation when
// reflect is set.
class Similarity {
  public:
    Similarity(double ratio, double angle, bool reflect, Vec2 translation);

    double ratio() const { return ratio_; }
    double angle() const { return angle_; }
    bool reflect() const { return reflect_; }
    Vec2 translation() const { return translation_; }

    Vec2 operator()(Vec2 p) const {
        double y = reflect_ ? -p.y : p.y;
        return {ratio_ * (cos_ * p.x - sin_ * y) + translation_.x,
                ratio_ * (sin_ * p.x + cos_ * y) + translation_.y};
    }

  private:
    double ratio_;
    double angle_;
    bool reflect_;
    Vec2 translation_;
    double cos_, sin_;  // snapped to exact values at multiples of pi/4, pi/6
};

// compose(f, g)(p) == f(g(p))
Similarity compose(const Similarity& f, const Similarity& g);

// Absolute area below which a set counts as null, plus the Hausdorff
// convergence criterion for iterative constructions.
struct Tolerance {
    double area_eps = 1e-9;
    double hausdorff_eps = 1e-6;
};

// Finite union of simple polygonal rings, kept regularized (equal to the
// closure of its interior) by construction: every instance is produced
// either empty or through the boolean pipeline, which snap-rounds vertices
// to an integer grid and removes degenerate rings.
class Region {
  public:
    Region() = default;

    // Builds (and regularizes) a region from one simple polygon.
    static Region polygon(std::span<const Vec2> vertices);
    static Region polygon(std::initializer_list<Vec2> vertices);
    // Builds a region from a full ring list; holes are recognized by
    // clockwise orientation. The input is regularized.
    static Region from_rings(const std::vector<std::vector<Vec2>>& rings);

    bool empty() const { return rings_.empty(); }
    // Outer rings are counterclockwise, holes clockwise.
    const std::vector<std::vector<Vec2>>& rings() const { return rings_; }
    std::size_t ring_count() const { return rings_.size(); }
    std::size_t vertex_count() const;

    double area() const;
    // Bounding box diagonal; 0 for the empty region.
    double diameter() const;
    void bounds(Vec2& lo, Vec2& hi) const;

  private:
    friend class Clipper;
    std::vector<std::vector<Vec2>> rings_;
};

enum class BoolOp { Union, Intersection, Difference };

Region boolean(BoolOp op, const Region& a, const Region& b);
Region union_all(std::span<const Region> regions);
Region regularize(const Region& r);

// Builds a region directly from rings that are known to be pairwise disjoint
// in measure (e.g. pieces of a tiling); the clipping pipeline is skipped and
// ring areas sum exactly. Degenerate rings are dropped.
Region adopt_disjoint_rings(std::vector<std::vector<Vec2>>&& rings);

// Pairwise intersection areas |regions[i] n regions[j]| for all i < j, in
// row-major order of the strict upper triangle. Hole-free inputs are measured
// exactly on a shared triangulation with a spatial index, without
// materializing any intersection; other inputs go through the boolean
// pipeline.
std::vector<double> mutual_intersection_areas(std::span<const Region> regions);

Region transform(const Similarity& f, const Region& r);

// Containment / disjointness up to a null set of area tol.area_eps.
bool contains_in_measure(const Region& a, const Region& b, const Tolerance& tol);
bool disjoint_in_measure(const Region& a, const Region& b, const Tolerance& tol);

// Boundary Hausdorff distance, computed from ring vertices plus densified
// edge samples against exact point-to-segment distances.
double hausdorff_distance(const Region& a, const Region& b);

// Crossing-number point membership (boundary points unspecified).
bool contains_point(const Region& r, Vec2 p);

}  // namespace simdis

#endif
