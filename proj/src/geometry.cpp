#include "simdis/geometry.hpp"

#include <boost/polygon/polygon.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <limits>
#include <thread>

namespace bp = boost::polygon;
using namespace boost::polygon::operators;

namespace simdis {
namespace {

// All boolean work happens on an integer grid: coordinates in [-4, 4] are
// scaled by kScale and rounded. Vertices that land on the same grid point
// merge, which realizes the vertex-snapping rule.
constexpr double kScale = 5e8;
constexpr double kMaxCoord = 4.0;
// Vertices within this many grid units of a segment get spliced into it
// before clipping, so edge-to-edge preset geometry cancels exactly.
constexpr std::int64_t kSnapUnits = 2;

struct IntPt {
    std::int64_t x, y;
    bool operator==(const IntPt& o) const { return x == o.x && y == o.y; }
};

struct IntRing {
    std::vector<IntPt> pts;
    bool hole = false;
};

std::int64_t quantize_coord(double v) {
    if (!std::isfinite(v)) throw GeometryError("non-finite coordinate");
    if (std::abs(v) > kMaxCoord)
        throw GeometryError("coordinate out of supported range [-4, 4]");
    return std::llround(v * kScale);
}

double ring_signed_area(const std::vector<Vec2>& ring) {
    double s = 0.0;
    for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
        Vec2 p = ring[i], q = ring[(i + 1) % n];
        s += p.x * q.y - p.y * q.x;
    }
    return 0.5 * s;
}

std::vector<IntRing> quantize(const Region& r) {
    std::vector<IntRing> out;
    out.reserve(r.rings().size());
    for (const auto& ring : r.rings()) {
        IntRing ir;
        ir.hole = ring_signed_area(ring) < 0.0;
        ir.pts.reserve(ring.size());
        for (Vec2 p : ring) {
            IntPt ip{quantize_coord(p.x), quantize_coord(p.y)};
            if (ir.pts.empty() || !(ir.pts.back() == ip)) ir.pts.push_back(ip);
        }
        while (ir.pts.size() > 1 && ir.pts.front() == ir.pts.back()) ir.pts.pop_back();
        if (ir.pts.size() >= 3) out.push_back(std::move(ir));
    }
    return out;
}

// Splices every grid vertex that lies within kSnapUnits of a segment's
// interior into that segment. Run jointly over all operands of a boolean so
// that T-junctions between them collapse into shared polylines.
void snap_refine(std::span<std::vector<IntRing>*> groups) {
    std::vector<IntPt> verts;
    for (auto* g : groups)
        for (const auto& ring : *g)
            for (const auto& p : ring.pts) verts.push_back(p);
    std::sort(verts.begin(), verts.end(), [](const IntPt& a, const IntPt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<std::pair<__int128, IntPt>> splits;
    for (auto* g : groups) {
        for (auto& ring : *g) {
            std::vector<IntPt> refined;
            refined.reserve(ring.pts.size());
            const std::size_t n = ring.pts.size();
            for (std::size_t i = 0; i < n; ++i) {
                IntPt a = ring.pts[i], b = ring.pts[(i + 1) % n];
                refined.push_back(a);
                std::int64_t xlo = std::min(a.x, b.x) - kSnapUnits;
                std::int64_t xhi = std::max(a.x, b.x) + kSnapUnits;
                std::int64_t ylo = std::min(a.y, b.y) - kSnapUnits;
                std::int64_t yhi = std::max(a.y, b.y) + kSnapUnits;
                auto lex = [](const IntPt& p, const IntPt& q) {
                    return p.x < q.x || (p.x == q.x && p.y < q.y);
                };
                std::int64_t dx = b.x - a.x, dy = b.y - a.y;
                __int128 len2 = (__int128)dx * dx + (__int128)dy * dy;
                if (len2 == 0) continue;
                splits.clear();
                auto it = std::lower_bound(verts.begin(), verts.end(),
                                           IntPt{xlo, ylo}, lex);
                while (it != verts.end() && it->x <= xhi) {
                    // skip per column to the [ylo, yhi] band
                    if (it->y < ylo) {
                        it = std::lower_bound(it, verts.end(), IntPt{it->x, ylo},
                                              lex);
                        continue;
                    }
                    if (it->y > yhi) {
                        it = std::lower_bound(it, verts.end(),
                                              IntPt{it->x + 1, ylo}, lex);
                        continue;
                    }
                    const IntPt v = *it;
                    ++it;
                    if (v == a || v == b) continue;
                    std::int64_t ux = v.x - a.x, uy = v.y - a.y;
                    __int128 cr = (__int128)dx * uy - (__int128)dy * ux;
                    long double lcr = (long double)cr;
                    if (lcr * lcr > (long double)(kSnapUnits * kSnapUnits) * (long double)len2)
                        continue;
                    __int128 t = (__int128)dx * ux + (__int128)dy * uy;
                    if (t <= 0 || t >= len2) continue;
                    splits.emplace_back(t, v);
                }
                std::sort(splits.begin(), splits.end(),
                          [](const auto& p, const auto& q) { return p.first < q.first; });
                for (const auto& [t, v] : splits)
                    if (!(refined.back() == v)) refined.push_back(v);
            }
            while (refined.size() > 1 && refined.front() == refined.back()) refined.pop_back();
            ring.pts = std::move(refined);
        }
    }
}

using BoostPoly = bp::polygon_data<int>;
using BoostPolyHoles = bp::polygon_with_holes_data<int>;
using BoostSet = bp::polygon_set_data<int>;

BoostSet to_boost(const std::vector<IntRing>& rings) {
    BoostSet ps;
    std::vector<bp::point_data<int>> pts;
    for (const auto& ring : rings) {
        pts.clear();
        pts.reserve(ring.pts.size());
        for (const auto& p : ring.pts)
            pts.emplace_back(static_cast<int>(p.x), static_cast<int>(p.y));
        BoostPoly poly;
        bp::set_points(poly, pts.begin(), pts.end());
        ps.insert(poly, ring.hole);
    }
    return ps;
}

}  // namespace

class Clipper {
  public:
    static Region from_boost(BoostSet& ps) {
        std::vector<BoostPolyHoles> polys;
        ps.get(polys);
        Region out;
        for (const auto& poly : polys) {
            std::vector<Vec2> outer;
            for (auto it = poly.begin(); it != poly.end(); ++it)
                outer.emplace_back(it->x() / kScale, it->y() / kScale);
            push_ring(out, std::move(outer), /*hole=*/false);
            for (auto h = poly.begin_holes(); h != poly.end_holes(); ++h) {
                std::vector<Vec2> hole;
                for (auto it = h->begin(); it != h->end(); ++it)
                    hole.emplace_back(it->x() / kScale, it->y() / kScale);
                push_ring(out, std::move(hole), /*hole=*/true);
            }
        }
        return out;
    }

    static Region adopt(std::vector<std::vector<Vec2>>&& rings) {
        Region res;
        res.rings_ = std::move(rings);
        return res;
    }

    static Region clip(BoolOp op, const Region& a, const Region& b) {
        auto ra = quantize(a);
        auto rb = quantize(b);
        std::array<std::vector<IntRing>*, 2> groups{&ra, &rb};
        snap_refine(groups);
        BoostSet sa = to_boost(ra);
        BoostSet sb = to_boost(rb);
        switch (op) {
            case BoolOp::Union: sa |= sb; break;
            case BoolOp::Intersection: sa &= sb; break;
            case BoolOp::Difference: sa -= sb; break;
        }
        return from_boost(sa);
    }

    static Region clip_union_all(std::span<const Region> regions) {
        std::vector<std::vector<IntRing>> quantized;
        quantized.reserve(regions.size());
        for (const auto& r : regions) quantized.push_back(quantize(r));
        std::vector<std::vector<IntRing>*> groups;
        for (auto& q : quantized) groups.push_back(&q);
        snap_refine(groups);
        BoostSet acc;
        for (const auto& q : quantized) {
            BoostSet s = to_boost(q);
            acc.insert(s);
        }
        return from_boost(acc);
    }

  private:
    static void push_ring(Region& out, std::vector<Vec2>&& ring, bool hole) {
        while (ring.size() > 1 && ring.front().x == ring.back().x &&
               ring.front().y == ring.back().y)
            ring.pop_back();
        if (ring.size() < 3) return;
        double sa = ring_signed_area(ring);
        if (sa == 0.0) return;
        // outer counterclockwise, holes clockwise
        if (hole == (sa > 0.0)) std::reverse(ring.begin(), ring.end());
        out.rings_.push_back(std::move(ring));
    }
};

// ---------------------------------------------------------------------------
// Similarity

Similarity::Similarity(double ratio, double angle, bool reflect, Vec2 translation)
    : ratio_(ratio), angle_(angle), reflect_(reflect), translation_(translation) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw GeometryError("similarity ratio must lie in (0,1)");
    if (!std::isfinite(angle) || !translation.finite())
        throw GeometryError("non-finite similarity parameters");
    cos_ = std::cos(angle);
    sin_ = std::sin(angle);
    // Rotations by multiples of pi/6 and pi/4 get exact matrix entries, so
    // preset boundaries land edge-aligned on the clipping grid.
    static const double exact[] = {0.0, 1.0,  -1.0, 0.5,  -0.5,
                                   std::sqrt(3.0) / 2.0,  -std::sqrt(3.0) / 2.0,
                                   std::sqrt(2.0) / 2.0,  -std::sqrt(2.0) / 2.0};
    for (double e : exact) {
        if (std::abs(cos_ - e) < 1e-15) cos_ = e;
        if (std::abs(sin_ - e) < 1e-15) sin_ = e;
    }
}

Similarity compose(const Similarity& f, const Similarity& g) {
    // f(g(p)) = rf Rf Mf (rg Rg Mg p + tg) + tf
    double ratio = f.ratio() * g.ratio();
    double angle = f.angle() + (f.reflect() ? -g.angle() : g.angle());
    bool reflect = f.reflect() != g.reflect();
    Vec2 t = f(g.translation());
    return Similarity(ratio, angle, reflect, t);
}

// ---------------------------------------------------------------------------
// Region

Region Region::polygon(std::span<const Vec2> vertices) {
    std::vector<std::vector<Vec2>> rings;
    rings.emplace_back(vertices.begin(), vertices.end());
    return from_rings(rings);
}

Region Region::polygon(std::initializer_list<Vec2> vertices) {
    return polygon(std::span<const Vec2>(vertices.begin(), vertices.size()));
}

Region Region::from_rings(const std::vector<std::vector<Vec2>>& rings) {
    Region raw;
    for (const auto& ring : rings) {
        for (Vec2 p : ring)
            if (!p.finite()) throw GeometryError("non-finite polygon vertex");
        if (ring.size() >= 3) raw.rings_.push_back(ring);
    }
    return regularize(raw);
}

std::size_t Region::vertex_count() const {
    std::size_t n = 0;
    for (const auto& r : rings_) n += r.size();
    return n;
}

double Region::area() const {
    double s = 0.0;
    for (const auto& r : rings_) s += ring_signed_area(r);
    return s;
}

void Region::bounds(Vec2& lo, Vec2& hi) const {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    hi = {-lo.x, -lo.y};
    for (const auto& r : rings_)
        for (Vec2 p : r) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        }
}

double Region::diameter() const {
    if (rings_.empty()) return 0.0;
    Vec2 lo, hi;
    bounds(lo, hi);
    return dist(lo, hi);
}

// ---------------------------------------------------------------------------
// Boolean pipeline

Region boolean(BoolOp op, const Region& a, const Region& b) {
    if (a.empty()) {
        if (op == BoolOp::Union) return regularize(b);
        return Region();
    }
    if (b.empty()) {
        if (op == BoolOp::Intersection) return Region();
        return regularize(a);
    }
    return Clipper::clip(op, a, b);
}

Region union_all(std::span<const Region> regions) {
    std::vector<Region> nonempty;
    for (const auto& r : regions)
        if (!r.empty()) nonempty.push_back(r);
    if (nonempty.empty()) return Region();
    return Clipper::clip_union_all(nonempty);
}

Region regularize(const Region& r) {
    if (r.empty()) return Region();
    return Clipper::clip_union_all(std::span<const Region>(&r, 1));
}

Region transform(const Similarity& f, const Region& r) {
    std::vector<std::vector<Vec2>> rings;
    rings.reserve(r.rings().size());
    for (const auto& ring : r.rings()) {
        std::vector<Vec2> img;
        img.reserve(ring.size());
        for (Vec2 p : ring) img.push_back(f(p));
        // a reflection flips winding; restore the orientation convention
        if (f.reflect()) std::reverse(img.begin(), img.end());
        rings.push_back(std::move(img));
    }
    // An affine image of a regularized region is regularized; skip the
    // pipeline so piece areas stay exact in double precision.
    return Clipper::adopt(std::move(rings));
}

Region adopt_disjoint_rings(std::vector<std::vector<Vec2>>&& rings) {
    std::vector<std::vector<Vec2>> kept;
    kept.reserve(rings.size());
    for (auto& ring : rings) {
        for (Vec2 p : ring)
            if (!p.finite()) throw GeometryError("non-finite polygon vertex");
        if (ring.size() >= 3 && ring_signed_area(ring) != 0.0)
            kept.push_back(std::move(ring));
    }
    return Clipper::adopt(std::move(kept));
}

// ---------------------------------------------------------------------------
// Grid-partitioned measure queries

namespace {

struct TaggedRing {
    IntRing ring;
    std::int64_t xlo, xhi, ylo, yhi;
};

void append_tagged(const Region& r, std::vector<TaggedRing>& out,
                   std::size_t& max_verts) {
    for (auto& ir : quantize(r)) {
        TaggedRing t;
        t.xlo = t.ylo = std::numeric_limits<std::int64_t>::max();
        t.xhi = t.yhi = std::numeric_limits<std::int64_t>::min();
        for (const auto& p : ir.pts) {
            t.xlo = std::min(t.xlo, p.x);
            t.xhi = std::max(t.xhi, p.x);
            t.ylo = std::min(t.ylo, p.y);
            t.yhi = std::max(t.yhi, p.y);
        }
        max_verts = std::max(max_verts, ir.pts.size());
        t.ring = std::move(ir);
        out.push_back(std::move(t));
    }
}

long double boost_set_area(BoostSet& ps) {
    std::vector<BoostPolyHoles> polys;
    ps.get(polys);
    long double a = 0.0;
    for (const auto& poly : polys) a += bp::area(poly);
    return a;
}

double partitioned_area(bool intersect, std::span<const Region> as,
                        std::span<const Region> bs) {
    std::vector<TaggedRing> ra, rb;
    std::size_t max_verts = 0;
    for (const auto& r : as) append_tagged(r, ra, max_verts);
    for (const auto& r : bs) append_tagged(r, rb, max_verts);
    if (ra.empty()) return 0.0;
    if (intersect && rb.empty()) return 0.0;

    const std::size_t total = ra.size() + rb.size();
    if (total < 512 || max_verts > 4096) {
        // small or coarse-grained input: the plain pipeline is cheaper
        Region a = as.size() == 1 ? as[0] : union_all(as);
        Region b = union_all(bs);
        return boolean(intersect ? BoolOp::Intersection : BoolOp::Difference, a, b)
            .area();
    }

    // grid over the bounding box of the first operand (the result lives there)
    std::int64_t x0 = std::numeric_limits<std::int64_t>::max(), x1 = -x0;
    std::int64_t y0 = x0, y1 = -x0;
    for (const auto& t : ra) {
        x0 = std::min(x0, t.xlo);
        x1 = std::max(x1, t.xhi);
        y0 = std::min(y0, t.ylo);
        y1 = std::max(y1, t.yhi);
    }
    // aim for a couple dozen rings per cell; Boost set-up cost dominates below
    const int g = std::clamp(
        static_cast<int>(std::sqrt(static_cast<double>(total) / 24.0)), 1, 512);
    const std::int64_t w = (x1 - x0) / g + 1;
    const std::int64_t h = (y1 - y0) / g + 1;

    auto cells_of = [&](const TaggedRing& t, auto&& fn) {
        int ix0 = static_cast<int>(std::clamp<std::int64_t>((t.xlo - x0) / w, 0, g - 1));
        int ix1 = static_cast<int>(std::clamp<std::int64_t>((t.xhi - x0) / w, 0, g - 1));
        int iy0 = static_cast<int>(std::clamp<std::int64_t>((t.ylo - y0) / h, 0, g - 1));
        int iy1 = static_cast<int>(std::clamp<std::int64_t>((t.yhi - y0) / h, 0, g - 1));
        for (int iy = iy0; iy <= iy1; ++iy)
            for (int ix = ix0; ix <= ix1; ++ix) fn(iy * g + ix);
    };
    std::vector<std::vector<std::int32_t>> ca(g * g), cb(g * g);
    for (std::size_t i = 0; i < ra.size(); ++i)
        cells_of(ra[i], [&](int c) { ca[c].push_back(static_cast<std::int32_t>(i)); });
    for (std::size_t i = 0; i < rb.size(); ++i) {
        if (rb[i].xhi < x0 || rb[i].xlo > x1 || rb[i].yhi < y0 || rb[i].ylo > y1)
            continue;
        cells_of(rb[i], [&](int c) { cb[c].push_back(static_cast<std::int32_t>(i)); });
    }

    const unsigned threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    auto worker = [&](unsigned tid) -> long double {
        long double sum = 0.0;
        std::vector<IntRing> ga, gb;
        for (int c = static_cast<int>(tid); c < g * g;
             c += static_cast<int>(threads)) {
            if (ca[c].empty()) continue;
            if (intersect && cb[c].empty()) continue;
            ga.clear();
            gb.clear();
            for (std::int32_t id : ca[c]) ga.push_back(ra[id].ring);
            for (std::int32_t id : cb[c]) gb.push_back(rb[id].ring);
            std::array<std::vector<IntRing>*, 2> groups{&ga, &gb};
            snap_refine(groups);
            BoostSet sa = to_boost(ga);
            // clip to the cell rectangle so cell contributions sum exactly
            std::int64_t cx0 = x0 + (c % g) * w, cy0 = y0 + (c / g) * h;
            std::int64_t cx1 = std::min(cx0 + w, x1 + 1);
            std::int64_t cy1 = std::min(cy0 + h, y1 + 1);
            BoostPoly rect;
            std::array<bp::point_data<int>, 4> corners{
                bp::point_data<int>(static_cast<int>(cx0), static_cast<int>(cy0)),
                bp::point_data<int>(static_cast<int>(cx1), static_cast<int>(cy0)),
                bp::point_data<int>(static_cast<int>(cx1), static_cast<int>(cy1)),
                bp::point_data<int>(static_cast<int>(cx0), static_cast<int>(cy1))};
            bp::set_points(rect, corners.begin(), corners.end());
            BoostSet sr;
            sr.insert(rect);
            sa &= sr;
            if (!gb.empty()) {
                BoostSet sb = to_boost(gb);
                if (intersect)
                    sa &= sb;
                else
                    sa -= sb;
            }
            sum += boost_set_area(sa);
        }
        return sum;
    };

    std::vector<std::future<long double>> futs;
    for (unsigned t = 1; t < threads; ++t)
        futs.push_back(std::async(std::launch::async, worker, t));
    long double grid_area = worker(0);
    for (auto& fu : futs) grid_area += fu.get();
    return static_cast<double>(grid_area / ((long double)kScale * kScale));
}

// ---------------------------------------------------------------------------
// Triangle-soup measure queries

struct Tri {
    Vec2 a, b, c;
};

double tri_area2(const Tri& t) { return cross(t.b - t.a, t.c - t.a); }

// triangulates one CCW simple ring; collinear vertices are dropped
bool ear_clip_ring(const std::vector<Vec2>& ring, std::vector<Tri>& out) {
    const std::size_t n = ring.size();
    bool convex = true;
    for (std::size_t i = 0; i < n && convex; ++i)
        if (cross(ring[(i + 1) % n] - ring[i], ring[(i + 2) % n] - ring[(i + 1) % n]) < 0.0)
            convex = false;
    if (convex) {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            Tri t{ring[0], ring[i], ring[i + 1]};
            if (tri_area2(t) > 0.0) out.push_back(t);
        }
        return true;
    }
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (idx.size() > 3) {
        bool clipped = false;
        for (std::size_t i = 0; i < idx.size() && !clipped; ++i) {
            const std::size_t m = idx.size();
            Vec2 p = ring[idx[(i + m - 1) % m]];
            Vec2 q = ring[idx[i]];
            Vec2 r = ring[idx[(i + 1) % m]];
            double turn = cross(q - p, r - q);
            if (turn < 0.0) continue;
            if (turn == 0.0) {  // collinear corner contributes no area
                idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
                clipped = true;
                break;
            }
            bool blocked = false;
            for (std::size_t j = 0; j < m && !blocked; ++j) {
                if (j == i || j == (i + m - 1) % m || j == (i + 1) % m) continue;
                Vec2 w = ring[idx[j]];
                blocked = cross(q - p, w - p) > 0.0 && cross(r - q, w - q) > 0.0 &&
                          cross(p - r, w - r) > 0.0;
            }
            if (blocked) continue;
            out.push_back({p, q, r});
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
        }
        if (!clipped) return false;
    }
    Tri t{ring[idx[0]], ring[idx[1]], ring[idx[2]]};
    if (tri_area2(t) > 0.0) out.push_back(t);
    return true;
}

// false when the region has holes or a ring resists ear clipping
bool triangulate_region(const Region& r, std::vector<Tri>& out) {
    for (const auto& ring : r.rings()) {
        double sa = ring_signed_area(ring);
        if (sa < 0.0) return false;
        if (sa == 0.0) continue;
        if (!ear_clip_ring(ring, out)) return false;
    }
    return true;
}

// |A n B| for CCW triangles: separating-edge and containment short cuts first,
// then a Sutherland-Hodgman clip of A against B
double tri_pair_area(const Tri& A, const Tri& B) {
    const Vec2 av[3] = {A.a, A.b, A.c};
    const Vec2 bv[3] = {B.a, B.b, B.c};
    bool a_in_b = true;
    for (int e = 0; e < 3; ++e) {
        Vec2 p = bv[e], dir = bv[(e + 1) % 3] - p;
        int nonpos = 0;
        for (int i = 0; i < 3; ++i) {
            double s = cross(dir, av[i] - p);
            if (s <= 0.0) ++nonpos;
            if (s < 0.0) a_in_b = false;
        }
        if (nonpos == 3) return 0.0;
    }
    if (a_in_b) return 0.5 * tri_area2(A);
    bool b_in_a = true;
    for (int e = 0; e < 3; ++e) {
        Vec2 p = av[e], dir = av[(e + 1) % 3] - p;
        int nonpos = 0;
        for (int i = 0; i < 3; ++i) {
            double s = cross(dir, bv[i] - p);
            if (s <= 0.0) ++nonpos;
            if (s < 0.0) b_in_a = false;
        }
        if (nonpos == 3) return 0.0;
    }
    if (b_in_a) return 0.5 * tri_area2(B);

    Vec2 poly[8], next[8];
    int n = 3;
    for (int i = 0; i < 3; ++i) poly[i] = av[i];
    for (int e = 0; e < 3 && n > 2; ++e) {
        Vec2 p = bv[e], dir = bv[(e + 1) % 3] - p;
        int m = 0;
        for (int i = 0; i < n; ++i) {
            Vec2 cur = poly[i], nxt = poly[(i + 1) % n];
            double sc = cross(dir, cur - p), sn = cross(dir, nxt - p);
            if (sc >= 0.0) next[m++] = cur;
            if ((sc > 0.0) != (sn > 0.0) && sc != sn)
                next[m++] = cur + (nxt - cur) * (sc / (sc - sn));
        }
        n = m;
        for (int i = 0; i < n; ++i) poly[i] = next[i];
    }
    if (n < 3) return 0.0;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += cross(poly[i], poly[(i + 1) % n]);
    return std::max(0.0, 0.5 * s);
}

struct TriBox {
    double xlo, ylo, xhi, yhi;
};

TriBox tri_box(const Tri& t) {
    TriBox b;
    b.xlo = std::min({t.a.x, t.b.x, t.c.x});
    b.xhi = std::max({t.a.x, t.b.x, t.c.x});
    b.ylo = std::min({t.a.y, t.b.y, t.c.y});
    b.yhi = std::max({t.a.y, t.b.y, t.c.y});
    return b;
}

bool boxes_overlap(const TriBox& a, const TriBox& b) {
    return a.xlo <= b.xhi && b.xlo <= a.xhi && a.ylo <= b.yhi && b.ylo <= a.yhi;
}

// triangles bucketed per size class into a uniform grid of cells matching the
// class size, stored as one sorted (cell key, triangle) list
class TriIndex {
  public:
    void build(const std::vector<Tri>& tris, const std::vector<TriBox>& boxes) {
        tris_ = &tris;
        boxes_ = &boxes;
        entries_.clear();
        for (std::size_t i = 0; i < tris.size(); ++i) {
            const TriBox& b = boxes[i];
            int k = class_of(std::max(b.xhi - b.xlo, b.yhi - b.ylo));
            double cell = std::ldexp(1.0, k);
            auto ix0 = cell_coord(b.xlo, cell), ix1 = cell_coord(b.xhi, cell);
            auto iy0 = cell_coord(b.ylo, cell), iy1 = cell_coord(b.yhi, cell);
            for (std::int64_t ix = ix0; ix <= ix1; ++ix)
                for (std::int64_t iy = iy0; iy <= iy1; ++iy)
                    entries_.emplace_back(key(k, ix, iy),
                                          static_cast<std::int32_t>(i));
        }
        std::sort(entries_.begin(), entries_.end());
        classes_.clear();
        std::size_t pos = 0;
        while (pos < entries_.size()) {
            int k = static_cast<int>(entries_[pos].first >> 56) - 32;
            std::size_t end = pos;
            while (end < entries_.size() &&
                   static_cast<int>(entries_[end].first >> 56) - 32 == k)
                ++end;
            Class cl{k, std::ldexp(1.0, k), pos, end,
                     {1e300, 1e300, -1e300, -1e300}};
            for (std::size_t e = pos; e < end; ++e) {
                const TriBox& tb = (*boxes_)[entries_[e].second];
                cl.box.xlo = std::min(cl.box.xlo, tb.xlo);
                cl.box.ylo = std::min(cl.box.ylo, tb.ylo);
                cl.box.xhi = std::max(cl.box.xhi, tb.xhi);
                cl.box.yhi = std::max(cl.box.yhi, tb.yhi);
            }
            classes_.push_back(cl);
            pos = end;
        }
    }

    // adds sum of |q n t| over indexed triangles t touching q's bbox
    void accumulate(const Tri& q, const TriBox& qb, long double& sum) const {
        for (const auto& cl : classes_) {
            if (!boxes_overlap(qb, cl.box)) continue;
            const double cell = cl.cell;
            auto qx0 = cell_coord(qb.xlo, cell), qx1 = cell_coord(qb.xhi, cell);
            auto qy0 = cell_coord(qb.ylo, cell), qy1 = cell_coord(qb.yhi, cell);
            const std::size_t count = cl.end - cl.begin;
            const auto nx = static_cast<std::uint64_t>(qx1 - qx0 + 1);
            if (nx > count) {
                // coarse query over a fine class: walk the class instead
                for (std::size_t e = cl.begin; e < cl.end; ++e) {
                    std::int32_t id = entries_[e].second;
                    const TriBox& tb = (*boxes_)[id];
                    // one entry per triangle: its low cell
                    if (entries_[e].first !=
                        key(cl.k, cell_coord(tb.xlo, cell), cell_coord(tb.ylo, cell)))
                        continue;
                    if (!boxes_overlap(qb, tb)) continue;
                    sum += tri_pair_area(q, (*tris_)[id]);
                }
                continue;
            }
            for (std::int64_t ix = qx0; ix <= qx1; ++ix) {
                auto it = std::lower_bound(
                    entries_.begin() + static_cast<std::ptrdiff_t>(cl.begin),
                    entries_.begin() + static_cast<std::ptrdiff_t>(cl.end),
                    std::make_pair(key(cl.k, ix, qy0), std::int32_t{0}));
                auto stop = entries_.begin() + static_cast<std::ptrdiff_t>(cl.end);
                const std::uint64_t hi = key(cl.k, ix, qy1);
                for (; it != stop && it->first <= hi; ++it) {
                    std::int32_t id = it->second;
                    const TriBox& tb = (*boxes_)[id];
                    // canonical cell so every pair is counted exactly once
                    if (it->first != key(cl.k,
                                         std::max(qx0, cell_coord(tb.xlo, cell)),
                                         std::max(qy0, cell_coord(tb.ylo, cell))))
                        continue;
                    if (!boxes_overlap(qb, tb)) continue;
                    sum += tri_pair_area(q, (*tris_)[id]);
                }
            }
        }
    }

    bool built() const { return tris_ != nullptr; }

  private:
    struct Class {
        int k;
        double cell;
        std::size_t begin, end;
        TriBox box;
    };

    static int class_of(double size) {
        int k = 0;
        std::frexp(size, &k);
        // two octaves per class keep the class count small; cell coordinates
        // must fit the 28-bit key fields over [-4, 4]
        if (k & 1) ++k;
        return std::clamp(k, -24, 6);
    }

    static std::int64_t cell_coord(double v, double cell) {
        return static_cast<std::int64_t>(std::floor(v / cell));
    }

    static std::uint64_t key(int k, std::int64_t ix, std::int64_t iy) {
        return (static_cast<std::uint64_t>(k + 32) << 56) |
               ((static_cast<std::uint64_t>(ix + (std::int64_t{1} << 26)) & 0xFFFFFFF)
                << 28) |
               (static_cast<std::uint64_t>(iy + (std::int64_t{1} << 26)) & 0xFFFFFFF);
    }

    const std::vector<Tri>* tris_ = nullptr;
    const std::vector<TriBox>* boxes_ = nullptr;
    std::vector<std::pair<std::uint64_t, std::int32_t>> entries_;
    std::vector<Class> classes_;
};

}  // namespace

std::vector<double> mutual_intersection_areas(std::span<const Region> regions) {
    const std::size_t k = regions.size();
    std::vector<double> out(k * (k - 1) / 2, 0.0);
    if (k < 2) return out;

    std::vector<std::vector<Tri>> tris(k);
    bool tri_ok = true;
    for (std::size_t i = 0; i < k && tri_ok; ++i)
        tri_ok = triangulate_region(regions[i], tris[i]);

    std::size_t idx = 0;
    if (!tri_ok) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j, ++idx) {
                if (regions[i].ring_count() + regions[j].ring_count() < 512)
                    out[idx] =
                        boolean(BoolOp::Intersection, regions[i], regions[j]).area();
                else
                    out[idx] = partitioned_area(
                        true, std::span<const Region>(&regions[i], 1),
                        std::span<const Region>(&regions[j], 1));
            }
        return out;
    }

    std::vector<std::vector<TriBox>> boxes(k);
    for (std::size_t i = 0; i < k; ++i) {
        boxes[i].reserve(tris[i].size());
        for (const auto& t : tris[i]) boxes[i].push_back(tri_box(t));
    }
    std::vector<TriIndex> index(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j, ++idx) {
            if (tris[i].empty() || tris[j].empty()) continue;
            std::size_t big = tris[i].size() >= tris[j].size() ? i : j;
            std::size_t small = big == i ? j : i;
            long double sum = 0.0;
            if (tris[big].size() <= 64 || tris[small].size() <= 8) {
                for (std::size_t a = 0; a < tris[small].size(); ++a)
                    for (std::size_t b = 0; b < tris[big].size(); ++b)
                        if (boxes_overlap(boxes[small][a], boxes[big][b]))
                            sum += tri_pair_area(tris[small][a], tris[big][b]);
            } else {
                if (!index[big].built()) index[big].build(tris[big], boxes[big]);
                for (std::size_t a = 0; a < tris[small].size(); ++a)
                    index[big].accumulate(tris[small][a], boxes[small][a], sum);
            }
            out[idx] = static_cast<double>(sum);
        }
    return out;
}

bool contains_in_measure(const Region& a, const Region& b, const Tolerance& tol) {
    if (a.empty()) return true;
    return boolean(BoolOp::Difference, a, b).area() <= tol.area_eps;
}

bool disjoint_in_measure(const Region& a, const Region& b, const Tolerance& tol) {
    if (a.empty() || b.empty()) return true;
    return boolean(BoolOp::Intersection, a, b).area() <= tol.area_eps;
}

// ---------------------------------------------------------------------------
// Hausdorff distance and point membership

namespace {

struct Seg {
    Vec2 a, b;
};

std::vector<Seg> segments_of(const Region& r) {
    std::vector<Seg> segs;
    for (const auto& ring : r.rings())
        for (std::size_t i = 0, n = ring.size(); i < n; ++i)
            segs.push_back({ring[i], ring[(i + 1) % n]});
    return segs;
}

double point_segment_dist(Vec2 p, const Seg& s) {
    Vec2 d = s.b - s.a;
    double len2 = dot(d, d);
    if (len2 == 0.0) return dist(p, s.a);
    double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return dist(p, s.a + d * t);
}

std::vector<Vec2> boundary_samples(const Region& r, double pitch) {
    std::vector<Vec2> samples;
    for (const auto& ring : r.rings()) {
        for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
            Vec2 a = ring[i], b = ring[(i + 1) % n];
            samples.push_back(a);
            double len = dist(a, b);
            int steps = static_cast<int>(len / pitch);
            for (int k = 1; k <= steps; ++k)
                samples.push_back(a + (b - a) * (static_cast<double>(k) / (steps + 1)));
        }
    }
    return samples;
}

double directed_hausdorff(const Region& a, const Region& b, double pitch) {
    auto segs = segments_of(b);
    double worst = 0.0;
    for (Vec2 p : boundary_samples(a, pitch)) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : segs) best = std::min(best, point_segment_dist(p, s));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const Region& a, const Region& b) {
    if (a.empty() || b.empty())
        throw GeometryError("hausdorff_distance undefined for empty regions");
    double diam = std::max(a.diameter(), b.diameter());
    double pitch = std::max(diam / 1024.0, 1e-9);
    return std::max(directed_hausdorff(a, b, pitch), directed_hausdorff(b, a, pitch));
}

bool contains_point(const Region& r, Vec2 p) {
    bool inside = false;
    for (const auto& ring : r.rings()) {
        for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
            Vec2 a = ring[i], b = ring[(i + 1) % n];
            if ((a.y > p.y) != (b.y > p.y)) {
                double xi = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if (p.x < xi) inside = !inside;
            }
        }
    }
    return inside;
}

}  // namespace simdis
