#include <doctest.h>

#include <cmath>

#include "simdis/dissection.hpp"
#include "simdis/presets.hpp"

using namespace simdis;

namespace {
const double kS3 = std::sqrt(3.0);

Tolerance tol_for(const Region& d) { return Tolerance{1e-9 * d.area(), 1e-6}; }
}  // namespace

TEST_CASE("seed residue Y = D \\ Phi(D)") {
    SUBCASE("triangle family at r=1/2") {
        auto p = presets::build("exa4", 0.5);
        Region y = compute_seed_Y(p.family, p.domain);
        CHECK(y.area() == doctest::Approx(kS3 / 8).epsilon(1e-8));
    }
    SUBCASE("square family at r=1/2 leaves the off-diagonal half") {
        auto p = presets::build("exasquare", 0.5);
        Region y = compute_seed_Y(p.family, p.domain);
        CHECK(y.area() == doctest::Approx(0.5).epsilon(1e-9));
    }
}

TEST_CASE("inside non-overlapping checker") {
    SUBCASE("passes on the triangle family up to r=1/2") {
        for (double r : {0.3, 0.45, 0.5}) {
            auto p = presets::build("exa4", r);
            auto rep = check_inside_nonoverlapping(p.family, p.domain,
                                                   tol_for(p.domain));
            CHECK(rep.overall);
            CHECK(rep.theorem == TheoremId::InsideNonOverlapping);
            const Condition* gap = rep.find("phi_d_proper");
            REQUIRE(gap != nullptr);
            CHECK(gap->pass);
        }
    }
    SUBCASE("fails past r=1/2 with an overlap witness") {
        auto p = presets::build("exa4", 0.55);
        auto rep =
            check_inside_nonoverlapping(p.family, p.domain, tol_for(p.domain));
        CHECK_FALSE(rep.overall);
        const Condition* ov = rep.find("overlap(f1(D),f2(D))");
        REQUIRE(ov != nullptr);
        CHECK_FALSE(ov->pass);
        CHECK(ov->measured_area > 1e-4);
        CHECK(rep.witnesses.count("overlap(f1(D),f2(D))") == 1);
    }
    SUBCASE("fails when the maps leave the domain") {
        // the point-reflection map escapes the triangle for r > 1/2
        auto p = presets::build("exaoutside", presets::threshold("exaoutside"));
        auto rep =
            check_inside_nonoverlapping(p.family, p.domain, tol_for(p.domain));
        CHECK_FALSE(rep.overall);
        CHECK_FALSE(rep.find("inside(f1(D))")->pass);
    }
}

TEST_CASE("general Y-criterion") {
    SUBCASE("empty Y routes to the inside checker") {
        auto p = presets::build("exa4", 0.45);
        auto rep = check_main(p.family, p.domain, Region(), tol_for(p.domain));
        CHECK(rep.theorem == TheoremId::InsideNonOverlapping);
        CHECK(rep.overall);
    }
    SUBCASE("golden-ratio family passes up to its threshold") {
        for (double r : {0.55, 0.598, (std::sqrt(5.0) - 1.0) / 2.0}) {
            auto p = presets::build("exagold", r);
            auto rep = check_main(p.family, p.domain, *p.seed_y, tol_for(p.domain));
            CHECK(rep.overall);
            REQUIRE(rep.c_region.has_value());
            CHECK(rep.c_region->area() > 0.0);
        }
    }
    SUBCASE("golden-ratio family fails past the threshold with a witness") {
        auto p = presets::build("exagold", 0.638);
        auto rep = check_main(p.family, p.domain, *p.seed_y, tol_for(p.domain));
        CHECK_FALSE(rep.overall);
        bool witnessed = false;
        for (const auto& c : rep.conditions)
            if (!c.pass && rep.witnesses.count(c.name)) witnessed = true;
        CHECK(witnessed);
    }
    SUBCASE("mirrored family passes at its threshold") {
        auto p = presets::build("exaflip", 1.0 / presets::solve_high_phi());
        auto rep = check_main(p.family, p.domain, *p.seed_y, tol_for(p.domain));
        CHECK(rep.overall);
    }
}

TEST_CASE("outside-family checker") {
    SUBCASE("passes for the outside pair at its threshold") {
        auto p = presets::build("exaoutside", 1.0 / presets::solve_high_phi());
        auto rep = check_outside(p.family, p.domain, 1, tol_for(p.domain));
        CHECK(rep.overall);
        REQUIRE(rep.constructed_y.has_value());
        CHECK(rep.constructed_y->area() > 0.0);
    }
    SUBCASE("rejects n < 1") {
        auto p = presets::build("exaoutside", 0.5);
        CHECK_THROWS_AS(check_outside(p.family, p.domain, 0, tol_for(p.domain)),
                        GeometryError);
    }
    SUBCASE("flags the non-dissectable family above r=1/2") {
        auto p = presets::build("exanodis", 0.55);
        auto rep = check_outside(p.family, p.domain, 1, tol_for(p.domain));
        CHECK_FALSE(rep.overall);
        bool witnessed = false;
        for (const auto& c : rep.conditions)
            if (!c.pass && rep.witnesses.count(c.name)) witnessed = true;
        CHECK(witnessed);
    }
    SUBCASE("accepts the same family below r=1/2") {
        auto p = presets::build("exanodis", 0.45);
        auto rep = check_outside(p.family, p.domain, 1, tol_for(p.domain));
        CHECK(rep.overall);
    }
}

TEST_CASE("dissect on the triangle family") {
    auto p = presets::build("exa4", 0.5);
    Tolerance eps{1e-6 * p.domain.area(), 1e-6};
    auto res = dissect(p.family, p.domain, Region(), eps);
    CHECK(res.pieces.size() == 3);
    CHECK(res.uncovered_area <= 1e-6 * p.domain.area());
    CHECK(res.overlap_area < 1e-9 * p.domain.area());
    REQUIRE(res.area_ratios.size() == 3);
    CHECK(res.area_ratios[0] == doctest::Approx(1.0));
    CHECK(res.area_ratios[1] == doctest::Approx(0.25).epsilon(1e-5));
    CHECK(res.area_ratios[2] == doctest::Approx(0.25).epsilon(1e-5));
    CHECK(res.depth_used > 0);

    // the three pieces really dissect D
    auto rep = verify(p.domain, p.family, res.generator,
                      Tolerance{2e-6 * p.domain.area(), 1e-6});
    CHECK(rep.overall);
}

TEST_CASE("dissect refuses a failing precondition unless overridden") {
    auto p = presets::build("exanodis", 0.55);
    Region y = compute_seed_Y(p.family, p.domain);
    Tolerance eps{1e-4 * p.domain.area(), 1e-6};
    CHECK_THROWS_AS(dissect(p.family, p.domain, y, eps), DissectRefused);
    try {
        dissect(p.family, p.domain, y, eps);
    } catch (const DissectRefused& e) {
        CHECK_FALSE(e.report.overall);
    }
    auto forced = dissect(p.family, p.domain, y, eps, Limits{}, true);
    CHECK(forced.overlap_area > 1e-4);
}

TEST_CASE("verify fixed dissections") {
    Tolerance tight{1e-9 * (kS3 / 4), 1e-6};
    SUBCASE("pentagon generator on the triangle") {
        auto p = presets::build("scherer", 0.5);
        auto rep = verify(p.domain, p.family, *p.known_generator, tight);
        CHECK(rep.overall);
        REQUIRE(rep.piece_areas.size() == 3);
        CHECK(rep.piece_areas[1] / rep.piece_areas[0] ==
              doctest::Approx(0.25).epsilon(1e-9));
        CHECK(rep.piece_areas[2] / rep.piece_areas[0] ==
              doctest::Approx(0.25).epsilon(1e-9));
    }
    SUBCASE("rectangle generator") {
        auto p = presets::build("rectangle", 0.7);
        auto rep = verify(p.domain, p.family, *p.known_generator,
                          Tolerance{1e-9 * p.domain.area(), 1e-6});
        CHECK(rep.overall);
    }
    SUBCASE("a perturbed generator fails") {
        auto p = presets::build("scherer", 0.5);
        Region bad = Region::polygon({{1.0 / 3.0 + 0.01, 0.0},
                                      {1.0, 0.0},
                                      {0.5, kS3 / 2},
                                      {0.25, kS3 / 4},
                                      {7.0 / 12.0, kS3 / 4}});
        auto rep = verify(p.domain, p.family, bad, tight);
        CHECK_FALSE(rep.overall);
    }
}

TEST_CASE("partial sums of the residue exhaust the domain") {
    auto p = presets::build("exa4", 0.45);
    double q = p.family.area_factor();
    Region y = compute_seed_Y(p.family, p.domain);
    Region acc;
    Region stage = y;
    for (int n = 0; n < 5; ++n) {
        acc = n == 0 ? y : boolean(BoolOp::Union, acc, stage);
        double expect = p.domain.area() * (1.0 - std::pow(q, n + 1));
        CHECK(std::abs(acc.area() - expect) < 1e-7 * p.domain.area());
        stage = phi(p.family, stage);
    }
}

TEST_CASE("even iterates are nested for an inside family") {
    auto p = presets::build("exa4", 0.5);
    Tolerance tol = tol_for(p.domain);
    Region p1 = phi(p.family, p.domain);
    Region p2 = phi(p.family, p1);
    CHECK(contains_in_measure(p1, p.domain, tol));
    CHECK(contains_in_measure(p2, p1, tol));
}

TEST_CASE("dissect agrees with the condensation construction") {
    auto p = presets::build("exa4", 0.45);
    Tolerance eps{1e-7 * p.domain.area(), 1e-6};
    auto res = dissect(p.family, p.domain, Region(), eps);

    Region yc = compute_seed_Y(p.family, p.domain);
    Family sq = composed_square(p.family);
    Region z = condensation_attractor(sq, yc, eps);
    CHECK(std::abs(z.area() - res.generator.area()) < 1e-6 * p.domain.area());
    CHECK(boolean(BoolOp::Difference, z, res.generator).area() <
          1e-6 * p.domain.area());
}
