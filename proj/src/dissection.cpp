#include "simdis/dissection.hpp"

#include <algorithm>
#include <cmath>

namespace simdis {
namespace {

void add_condition(CheckReport& rep, const std::string& name, double measured,
                   double threshold, Region witness = {}) {
    Condition c;
    c.name = name;
    c.measured_area = measured;
    c.threshold = threshold;
    c.pass = measured <= threshold;
    if (!c.pass && !witness.empty()) rep.witnesses[name] = std::move(witness);
    rep.conditions.push_back(std::move(c));
}

void finalize(CheckReport& rep) {
    rep.overall = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                              [](const Condition& c) { return c.pass; });
}

// containment-in-measure escape: area(a \ b), with witness
void containment_condition(CheckReport& rep, const std::string& name, const Region& a,
                           const Region& b, const Tolerance& tol) {
    Region escape = boolean(BoolOp::Difference, a, b);
    double measured = escape.area();  // before the move below
    add_condition(rep, name, measured, tol.area_eps, std::move(escape));
}

void overlap_condition(CheckReport& rep, const std::string& name, const Region& a,
                       const Region& b, const Tolerance& tol) {
    Region ov = boolean(BoolOp::Intersection, a, b);
    double measured = ov.area();  // before the move below
    add_condition(rep, name, measured, tol.area_eps, std::move(ov));
}

void attractor_condition(CheckReport& rep, const Family& f) {
    // sum r_i^2 < 1 certifies a null attractor
    Condition c;
    c.name = "attractor_null";
    c.measured_area = f.area_factor();
    c.threshold = 1.0;
    c.pass = f.area_factor() < 1.0;
    rep.conditions.push_back(std::move(c));
}

}  // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::InsideNonOverlapping: return "inside_nonoverlapping";
        case TheoremId::MainWithY: return "main_with_y";
        case TheoremId::OutsideCorollary: return "outside_corollary";
        case TheoremId::DissectionVerify: return "dissection_verify";
    }
    return "unknown";
}

const Condition* CheckReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

Region compute_seed_Y(const Family& f, const Region& d) {
    return boolean(BoolOp::Difference, d, phi(f, d));
}

CheckReport check_inside_nonoverlapping(const Family& f, const Region& d,
                                        const Tolerance& tol) {
    CheckReport rep;
    rep.theorem = TheoremId::InsideNonOverlapping;

    std::vector<Region> images;
    for (const auto& m : f.maps) images.push_back(transform(m, d));

    for (std::size_t i = 0; i < images.size(); ++i)
        containment_condition(rep, "inside(f" + std::to_string(i + 1) + "(D))",
                              images[i], d, tol);
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            overlap_condition(rep,
                              "overlap(f" + std::to_string(i + 1) + "(D),f" +
                                  std::to_string(j + 1) + "(D))",
                              images[i], images[j], tol);
    attractor_condition(rep, f);

    // Phi(D) != D, measured as an area gap
    double gap = d.area() - phi(f, d).area();
    Condition c;
    c.name = "phi_d_proper";
    c.measured_area = gap;
    c.threshold = tol.area_eps;
    c.pass = gap > tol.area_eps;
    rep.conditions.push_back(std::move(c));

    finalize(rep);
    return rep;
}

CheckReport check_main(const Family& f, const Region& d, const Region& y,
                       const Tolerance& tol) {
    if (y.empty()) return check_inside_nonoverlapping(f, d, tol);

    CheckReport rep;
    rep.theorem = TheoremId::MainWithY;
    attractor_condition(rep, f);

    // (1) Y = closure(Y interior): regularization must be an area no-op
    add_condition(rep, "y_regularized", std::abs(regularize(y).area() - y.area()),
                  tol.area_eps);

    // (2) Y, f_1(Y), ..., f_k(Y) inside D and mutually disjoint in measure
    std::vector<Region> yimg{y};
    for (const auto& m : f.maps) yimg.push_back(transform(m, y));
    std::vector<std::string> ynames{"Y"};
    for (std::size_t i = 1; i <= f.maps.size(); ++i)
        ynames.push_back("f" + std::to_string(i) + "(Y)");
    for (std::size_t i = 0; i < yimg.size(); ++i)
        containment_condition(rep, "inside(" + ynames[i] + ")", yimg[i], d, tol);
    for (std::size_t i = 0; i < yimg.size(); ++i)
        for (std::size_t j = i + 1; j < yimg.size(); ++j)
            overlap_condition(rep, "overlap(" + ynames[i] + "," + ynames[j] + ")",
                              yimg[i], yimg[j], tol);

    // (3') with C = closure(D \ (Y u Phi(Y)))
    Region yphi = union_all(yimg);  // Y u Phi(Y)
    Region c = boolean(BoolOp::Difference, d, yphi);
    rep.c_region = c;
    std::vector<Region> cimg;
    for (const auto& m : f.maps) cimg.push_back(transform(m, c));
    for (std::size_t i = 0; i < cimg.size(); ++i)
        containment_condition(rep, "inside(f" + std::to_string(i + 1) + "(C))",
                              cimg[i], c, tol);
    for (std::size_t i = 0; i < cimg.size(); ++i)
        for (std::size_t j = i + 1; j < cimg.size(); ++j)
            overlap_condition(rep,
                              "overlap(f" + std::to_string(i + 1) + "(C),f" +
                                  std::to_string(j + 1) + "(C))",
                              cimg[i], cimg[j], tol);

    finalize(rep);
    return rep;
}

CheckReport check_outside(const Family& f, const Region& d, int n,
                          const Tolerance& tol) {
    if (n < 1) throw GeometryError("check_outside requires n >= 1");

    CheckReport rep;
    rep.theorem = TheoremId::OutsideCorollary;
    attractor_condition(rep, f);

    std::vector<Region> dimg;
    for (const auto& m : f.maps) dimg.push_back(transform(m, d));
    for (std::size_t i = 0; i < dimg.size(); ++i)
        for (std::size_t j = i + 1; j < dimg.size(); ++j)
            overlap_condition(rep,
                              "overlap(f" + std::to_string(i + 1) + "(D),f" +
                                  std::to_string(j + 1) + "(D))",
                              dimg[i], dimg[j], tol);

    Region phid = union_all(dimg);
    Region ydm = boolean(BoolOp::Difference, d, phid);  // D \ Phi(D)

    // (i) at each even depth 2k, k < n:  Phi(D n Phi^2k(D \ Phi(D))) subset D
    std::vector<Region> yparts;
    Region iter = ydm;
    for (int k = 0; k < n; ++k) {
        Region sk = (k == 0) ? ydm : boolean(BoolOp::Intersection, d, iter);
        yparts.push_back(sk);
        containment_condition(rep, "phi_inside(depth_" + std::to_string(2 * k) + ")",
                              phi(f, sk), d, tol);
        if (k + 1 < n) iter = phi(f, phi(f, iter));
    }

    // (ii) Phi(D n Phi^2n(D)) subset D
    Region p2n = d;
    for (int i = 0; i < 2 * n; ++i) p2n = phi(f, p2n);
    Region tail = boolean(BoolOp::Intersection, d, p2n);
    containment_condition(rep, "phi_inside(tail)", phi(f, tail), d, tol);

    // constructed Y plus the disjointness of its images, which the criterion
    // guarantees and the general Y-criterion consumes
    Region y = union_all(yparts);
    rep.constructed_y = y;
    std::vector<Region> yimg{y};
    std::vector<std::string> ynames{"Y"};
    for (std::size_t i = 0; i < f.maps.size(); ++i) {
        yimg.push_back(transform(f.maps[i], y));
        ynames.push_back("f" + std::to_string(i + 1) + "(Y)");
    }
    for (std::size_t i = 0; i < yimg.size(); ++i)
        for (std::size_t j = i + 1; j < yimg.size(); ++j)
            overlap_condition(rep, "overlap(" + ynames[i] + "," + ynames[j] + ")",
                              yimg[i], yimg[j], tol);

    finalize(rep);
    return rep;
}

DissectionResult dissect(const Family& f, const Region& d, const Region& y,
                         const Tolerance& eps, const Limits& limits,
                         bool override_checks) {
    CheckReport pre = check_main(f, d, y, eps);
    if (!pre.overall && !override_checks) throw DissectRefused{pre};

    // C = closure(D \ (Y u Phi(Y))); the family is inside non-overlapping
    // for C whenever the checker passed.
    Region c = y.empty() ? d : boolean(BoolOp::Difference, d,
                                       boolean(BoolOp::Union, y, phi(f, y)));

    Region yc = boolean(BoolOp::Difference, c, phi(f, c));
    double q = f.area_factor();
    double q2 = q * q;

    DissectionResult res;
    int depth_used = 0;

    if (pre.overall) {
        // The checker guarantees the even iterates Phi^2k(Y_C) and Y are
        // pairwise disjoint in measure, so the generator can be assembled
        // ring by ring from composed similarities, with no boolean scans.
        std::vector<std::vector<Vec2>> zrings(yc.rings().begin(), yc.rings().end());
        Family sq = composed_square(f);
        std::vector<Similarity> level;
        if (!yc.empty() && q2 < 1.0) {
            // the pieces X, f_i(X) also miss the odd iterates, hence the (1+q)
            double tail = yc.area() * q2 / (1.0 - q2);
            while (tail * (1.0 + q) > eps.area_eps) {
                if (depth_used + 2 > limits.depth_cap)
                    throw ResourceError("dissect depth cap exceeded");
                if (level.empty()) {
                    level = sq.maps;
                } else {
                    std::vector<Similarity> next;
                    next.reserve(level.size() * sq.maps.size());
                    for (const auto& m : level)
                        for (const auto& g : sq.maps) next.push_back(compose(g, m));
                    level = std::move(next);
                }
                if (zrings.size() + level.size() * yc.ring_count() > limits.piece_cap)
                    throw ResourceError("dissect piece cap exceeded");
                for (const auto& m : level) {
                    for (const auto& ring : yc.rings()) {
                        std::vector<Vec2> img;
                        img.reserve(ring.size());
                        for (Vec2 p : ring) img.push_back(m(p));
                        if (m.reflect()) std::reverse(img.begin(), img.end());
                        zrings.push_back(std::move(img));
                    }
                }
                depth_used += 2;
                tail *= q2;
            }
        }
        for (const auto& ring : y.rings()) zrings.push_back(ring);
        res.generator = adopt_disjoint_rings(std::move(zrings));
    } else {
        // with the precondition overridden the iterates may overlap, so the
        // union has to be materialized
        Region z = yc;
        Region stage = yc;
        if (!yc.empty() && q2 < 1.0) {
            double tail = yc.area() * q2 / (1.0 - q2);
            while (tail * (1.0 + q) > eps.area_eps) {
                if (depth_used + 2 > limits.depth_cap)
                    throw ResourceError("dissect depth cap exceeded");
                stage = phi(f, phi(f, stage));
                if (z.ring_count() + stage.ring_count() > limits.piece_cap)
                    throw ResourceError("dissect piece cap exceeded");
                z = boolean(BoolOp::Union, z, stage);
                depth_used += 2;
                tail *= q2;
            }
        }
        res.generator = y.empty() ? z : boolean(BoolOp::Union, z, y);
    }

    res.precondition = std::move(pre);
    res.depth_used = depth_used;

    std::vector<Region> group;
    group.reserve(f.maps.size() + 2);
    group.push_back(d);
    group.push_back(res.generator);
    for (const auto& m : f.maps) group.push_back(transform(m, res.generator));
    auto inter = mutual_intersection_areas(group);
    const std::size_t n = group.size();
    auto at = [n](std::size_t i, std::size_t j) {
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    long double cov = 0.0, pair_sum = 0.0;
    res.overlap_area = 0.0;
    for (std::size_t i = 1; i < n; ++i) cov += inter[at(0, i)];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            pair_sum += inter[at(i, j)];
            res.overlap_area = std::max(res.overlap_area, inter[at(i, j)]);
        }
    // pieces can double-cover at most the measured pairwise overlaps, so this
    // upper-bounds the area of D left uncovered
    res.uncovered_area =
        std::max(0.0, static_cast<double>(d.area() - cov + pair_sum));
    res.pieces.assign(std::make_move_iterator(group.begin() + 1),
                      std::make_move_iterator(group.end()));

    double largest = 0.0;
    for (const auto& p : res.pieces) largest = std::max(largest, p.area());
    for (const auto& p : res.pieces)
        res.area_ratios.push_back(largest > 0.0 ? p.area() / largest : 0.0);
    return res;
}

CheckReport verify(const Region& d, const Family& f, const Region& x,
                   const Tolerance& tol) {
    CheckReport rep;
    rep.theorem = TheoremId::DissectionVerify;

    add_condition(rep, "x_regularized", std::abs(regularize(x).area() - x.area()),
                  tol.area_eps);

    std::vector<Region> group{d, x};
    std::vector<std::string> names{"X"};
    for (std::size_t i = 0; i < f.maps.size(); ++i) {
        group.push_back(transform(f.maps[i], x));
        names.push_back("f" + std::to_string(i + 1) + "(X)");
    }
    auto inter = mutual_intersection_areas(group);
    const std::size_t n = group.size();
    auto at = [n](std::size_t i, std::size_t j) {
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    std::span<const Region> pieces(group.data() + 1, n - 1);
    long double cov = 0.0, pair_sum = 0.0, piece_total = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        cov += inter[at(0, i)];
        piece_total += group[i].area();
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pair_sum += inter[at(i, j)];

    // area queries only; witnesses are rebuilt on failure when cheap enough
    std::size_t total_rings = 0;
    for (const auto& p : pieces) total_rings += p.ring_count();
    auto witness = [&](BoolOp op, const Region& a, const Region& b) {
        return total_rings <= 4096 ? boolean(op, a, b) : Region();
    };
    // both bounds include pair_sum: double coverage can hide that much
    double esc = std::max(0.0, static_cast<double>(d.area() - cov + pair_sum));
    add_condition(rep, "cover", esc, tol.area_eps,
                  esc > tol.area_eps ? witness(BoolOp::Difference, d, union_all(pieces))
                                     : Region());
    double excess = std::max(0.0, static_cast<double>(piece_total - cov + pair_sum));
    add_condition(rep, "no_excess", excess, tol.area_eps,
                  excess > tol.area_eps
                      ? witness(BoolOp::Difference, union_all(pieces), d)
                      : Region());
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double ov = inter[at(i, j)];
            add_condition(rep, "overlap(" + names[i - 1] + "," + names[j - 1] + ")",
                          ov, tol.area_eps,
                          ov > tol.area_eps
                              ? witness(BoolOp::Intersection, group[i], group[j])
                              : Region());
        }

    for (const auto& p : pieces) rep.piece_areas.push_back(p.area());
    finalize(rep);
    return rep;
}

}  // namespace simdis
