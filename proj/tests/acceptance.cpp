// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "simdis/cli.hpp"
#include "simdis/presets.hpp"

using namespace simdis;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

int quiet_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    return cli::run(args, out, err);
}

// ---------------------------------------------------------------------------

void criterion_triangle_dissection() {
    bool ok = true;
    std::ostringstream detail;
    for (double r : {0.45, 0.5}) {
        auto t0 = std::chrono::steady_clock::now();
        auto p = presets::build("exa4", r);
        double area = p.domain.area();
        if (!check_inside_nonoverlapping(p.family, p.domain,
                                         Tolerance{1e-9 * area, 1e-6})
                 .overall) {
            ok = false;
            detail << "r=" << r << " checker fails; ";
            continue;
        }
        Tolerance eps{1e-6 * area, 1e-6};
        DissectionResult res;
        try {
            res = dissect(p.family, p.domain, Region(), eps);
        } catch (const std::exception& e) {
            ok = false;
            detail << "r=" << r << " threw: " << e.what() << "; ";
            continue;
        }
        double dt = seconds_since(t0);
        bool covered = res.uncovered_area <= 1e-6 * area &&
                       res.overlap_area <= 1e-6 * area;
        bool ratios = res.area_ratios.size() == 3 &&
                      res.area_ratios[0] == 1.0 &&
                      std::abs(res.area_ratios[1] / (r * r) - 1.0) <= 1e-6 &&
                      std::abs(res.area_ratios[2] / (r * r) - 1.0) <= 1e-6;
        if (!(covered && ratios && res.depth_used <= 30 && dt <= 10.0)) {
            ok = false;
            detail << "r=" << r << " uncovered=" << res.uncovered_area
                   << " overlap=" << res.overlap_area
                   << " depth=" << res.depth_used << " t=" << dt << "s; ";
        }
    }
    report("triangle dissection at r=9/20 and r=1/2", ok, detail.str());
}

void criterion_golden_threshold() {
    bool ok = true;
    std::ostringstream detail;
    double golden = presets::constants().golden_threshold;

    for (double r : {0.598, golden}) {
        auto p = presets::build("exagold", r);
        Tolerance tol{1e-9 * p.domain.area(), 1e-6};
        if (!check_main(p.family, p.domain, *p.seed_y, tol).overall) {
            ok = false;
            detail << "unexpected fail at r=" << r << "; ";
        }
    }
    {
        auto p = presets::build("exagold", 0.638);
        Tolerance tol{1e-9 * p.domain.area(), 1e-6};
        auto rep = check_main(p.family, p.domain, *p.seed_y, tol);
        bool witnessed = false;
        for (const auto& c : rep.conditions)
            if (!c.pass && rep.witnesses.count(c.name)) witnessed = true;
        if (rep.overall || !witnessed) {
            ok = false;
            detail << "no witnessed failure at r=0.638; ";
        }
    }
    auto t0 = std::chrono::steady_clock::now();
    auto sw = cli::sweep_preset("exagold", 0.55, 0.65, 0.01, 1e-7);
    double dt = seconds_since(t0);
    if (!(sw.bracket_found && std::abs(sw.threshold_estimate - golden) <= 1e-6 &&
          dt <= 60.0)) {
        ok = false;
        detail << "sweep estimate=" << sw.threshold_estimate << " t=" << dt
               << "s; ";
    }
    report("golden-ratio threshold for the shared-edge triangle family", ok,
           detail.str());
}

void criterion_high_phi() {
    bool ok = true;
    std::ostringstream detail;
    double phi = presets::solve_high_phi();
    double t = 1.0 / phi;

    double residual = ((phi - 2.0) * phi + 1.0) * phi - 1.0;
    if (std::abs(residual) > 1e-12) {
        ok = false;
        detail << "cubic residual " << residual << "; ";
    }
    // independent cross-check: the square of the smallest Pisot number
    double pisot = 1.3;
    for (int i = 0; i < 64; ++i)
        pisot -= (pisot * pisot * pisot - pisot - 1.0) /
                 (3.0 * pisot * pisot - 1.0);
    if (std::abs(phi - pisot * pisot) > 1e-10) {
        ok = false;
        detail << "Pisot mismatch " << phi - pisot * pisot << "; ";
    }

    for (const std::string name : {"exaflip", "exasquare", "exaoutside"}) {
        auto sw = cli::sweep_preset(name, t - 0.05, t + 0.05, 0.01, 1e-6);
        if (!(sw.bracket_found && std::abs(sw.threshold_estimate - t) <= 1e-5)) {
            ok = false;
            detail << name << " estimate=" << sw.threshold_estimate << "; ";
        }
    }
    report("cube-root threshold shared by the three high-phi families", ok,
           detail.str());
}

void criterion_no_dissection() {
    bool ok = true;
    std::ostringstream detail;
    for (double r : {0.55, 0.6}) {
        auto p = presets::build("exanodis", r);
        Tolerance tol{1e-9 * p.domain.area(), 1e-6};
        auto rep = check_outside(p.family, p.domain, 1, tol);
        bool big_overlap = false;
        for (const auto& c : rep.conditions)
            if (!c.pass && c.measured_area > 10.0 * tol.area_eps)
                big_overlap = true;
        if (rep.overall || !big_overlap) {
            ok = false;
            detail << "r=" << r << " not flagged; ";
        }
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", r);
        int code = quiet_cli({"check", "--preset", "exanodis", "--r", buf});
        if (code != cli::kExitCheckFail) {
            ok = false;
            detail << "r=" << r << " exit=" << code << "; ";
        }
    }
    report("rotation-mismatched family is rejected above r=1/2", ok,
           detail.str());
}

void criterion_pentagon() {
    auto p = presets::build("scherer", 0.5);
    double area = p.domain.area();
    Tolerance tol{1e-9 * area, 1e-6};
    auto rep = verify(p.domain, p.family, *p.known_generator, tol);
    bool ok = rep.overall;
    std::ostringstream detail;
    for (const auto& c : rep.conditions)
        if (c.measured_area > 1e-9 * area) {
            ok = false;
            detail << c.name << " slack=" << c.measured_area << "; ";
        }
    if (rep.piece_areas.size() == 3) {
        double q1 = rep.piece_areas[1] / rep.piece_areas[0];
        double q2 = rep.piece_areas[2] / rep.piece_areas[0];
        if (std::abs(q1 - 0.25) > 1e-9 || std::abs(q2 - 0.25) > 1e-9) {
            ok = false;
            detail << "ratios " << q1 << " " << q2 << "; ";
        }
    } else {
        ok = false;
        detail << "missing piece areas; ";
    }
    report("pentagon generator dissects the equilateral triangle exactly", ok,
           detail.str());
}

void criterion_partial_sums() {
    auto p = presets::build("exa4", 0.45);
    double area = p.domain.area();
    double q = p.family.area_factor();
    Region y = compute_seed_Y(p.family, p.domain);
    Region acc;
    Region stage = y;
    bool ok = true;
    std::ostringstream detail;
    for (int n = 0; n <= 6; ++n) {
        acc = n == 0 ? y : boolean(BoolOp::Union, acc, stage);
        double expect = area * (1.0 - std::pow(q, n + 1));
        double err = std::abs(acc.area() - expect);
        if (err > 1e-7 * area) {
            ok = false;
            detail << "n=" << n << " err=" << err << "; ";
        }
        stage = phi(p.family, stage);
    }
    report("partial unions of the residue follow the geometric series", ok,
           detail.str());
}

void criterion_condensation_equivalence() {
    auto p = presets::build("exa4", 0.45);
    double area = p.domain.area();
    Tolerance eps{1e-7 * area, 1e-6};
    auto res = dissect(p.family, p.domain, Region(), eps);
    Region yc = compute_seed_Y(p.family, p.domain);
    Region z = condensation_attractor(composed_square(p.family), yc, eps);
    double d1 = boolean(BoolOp::Difference, z, res.generator).area();
    double d2 = boolean(BoolOp::Difference, res.generator, z).area();
    bool ok = d1 + d2 <= 1e-6 * area;
    std::ostringstream detail;
    if (!ok) detail << "symmetric difference " << d1 + d2;
    report("iterated residue matches the condensation attractor", ok,
           detail.str());
}

void criterion_boolean_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2026);
    const int res = 2048;
    bool ok = true;
    std::ostringstream detail;
    int worst = 0;
    for (int i = 0; i < 500 && ok; ++i) {
        auto pa = oracles::random_polygon(rng);
        auto pb = oracles::random_polygon(rng);
        Region a = Region::polygon(pa);
        Region b = Region::polygon(pb);
        BoolOp op = i % 3 == 0   ? BoolOp::Union
                    : i % 3 == 1 ? BoolOp::Intersection
                                 : BoolOp::Difference;
        oracles::RasterOp rop = i % 3 == 0 ? oracles::RasterOp::Union
                                : i % 3 == 1 ? oracles::RasterOp::Intersection
                                             : oracles::RasterOp::Difference;
        Region out = boolean(op, a, b);
        std::int64_t expect = oracles::raster_count({pa}, {pb}, rop, res);
        std::int64_t got = oracles::raster_count(out.rings(), {},
                                                 oracles::RasterOp::Single, res);
        int diff = static_cast<int>(std::llabs(expect - got));
        worst = std::max(worst, diff);
        if (diff > 3) {
            ok = false;
            detail << "case " << i << " differs by " << diff << " pixels; ";
        }
    }
    double dt = seconds_since(t0);
    if (dt > 300.0) {
        ok = false;
        detail << "took " << dt << "s; ";
    }
    if (ok) detail << "worst pixel difference " << worst;
    report("500 random boolean ops match the 2048x2048 raster oracle", ok,
           detail.str());
}

void criterion_outside_depth_two() {
    bool ok = true;
    std::ostringstream detail;
    {
        auto p = presets::build("exa4", 0.45);
        Tolerance tol{1e-9 * p.domain.area(), 1e-6};
        if (!check_outside(p.family, p.domain, 2, tol).overall) {
            ok = false;
            detail << "inside family fails at depth 2; ";
        }
    }
    double t = presets::threshold("exaoutside");
    struct Case {
        const char* name;
        double r;
    } cases[] = {{"exaoutside", t - 0.02},
                 {"exaoutside", t + 0.02},
                 {"exanodis", 0.45},
                 {"exanodis", 0.55}};
    for (const auto& c : cases) {
        auto p = presets::build(c.name, c.r);
        Tolerance tol{1e-9 * p.domain.area(), 1e-6};
        bool v1 = check_outside(p.family, p.domain, 1, tol).overall;
        bool v2 = check_outside(p.family, p.domain, 2, tol).overall;
        if (v1 != v2) {
            ok = false;
            detail << c.name << " r=" << c.r << " depth1=" << v1
                   << " depth2=" << v2 << "; ";
        }
    }
    report("depth-2 outside criterion agrees with depth 1", ok, detail.str());
}

}  // namespace

int main() {
    criterion_triangle_dissection();
    criterion_golden_threshold();
    criterion_high_phi();
    criterion_no_dissection();
    criterion_pentagon();
    criterion_partial_sums();
    criterion_condensation_equivalence();
    criterion_boolean_oracle();
    criterion_outside_depth_two();
    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", g_failures);
    return g_failures;
}
