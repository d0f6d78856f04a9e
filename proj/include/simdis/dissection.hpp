#ifndef SIMDIS_DISSECTION_HPP
#define SIMDIS_DISSECTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simdis/ifs.hpp"

namespace simdis {

enum class TheoremId {
    InsideNonOverlapping,  // non-overlapping inside family criterion
    MainWithY,             // general Y-criterion with constructed C
    OutsideCorollary,      // outside-family criterion at depth n
    DissectionVerify,      // direct verification of a claimed generator
};

std::string theorem_name(TheoremId id);

struct Condition {
    std::string name;
    bool pass = false;
    double measured_area = 0.0;  // the offending area (overlap or escape)
    double threshold = 0.0;
};

struct CheckReport {
    TheoremId theorem = TheoremId::InsideNonOverlapping;
    std::vector<Condition> conditions;
    bool overall = false;
    // failure witnesses keyed by condition name (the overlap or escape polygon)
    std::map<std::string, Region> witnesses;
    // C constructed by the Y-criterion, Y constructed by the outside checker
    std::optional<Region> c_region;
    std::optional<Region> constructed_y;
    // piece areas reported by verify()
    std::vector<double> piece_areas;

    const Condition* find(const std::string& name) const;
};

struct DissectionResult {
    Region generator;            // X (including Y when the Y-criterion was used)
    std::vector<Region> pieces;  // X, f_1(X), ..., f_k(X)
    double uncovered_area = 0.0;
    double overlap_area = 0.0;
    std::vector<double> area_ratios;  // normalized so the largest piece is 1
    int depth_used = 0;
    CheckReport precondition;
};

// dissect() refuses to run when its precondition checker fails and no
// override is given; the failing report rides along.
struct DissectRefused {
    CheckReport report;
};

// Y := closure(D \ Phi(D))
Region compute_seed_Y(const Family& f, const Region& d);

CheckReport check_inside_nonoverlapping(const Family& f, const Region& d,
                                        const Tolerance& tol);

// Conditions (1), (2) and (3') of the general criterion; an empty Y routes
// to check_inside_nonoverlapping.
CheckReport check_main(const Family& f, const Region& d, const Region& y,
                       const Tolerance& tol);

// Outside-family criterion at depth n >= 1; on success constructed_y holds
// the Y to hand to dissect().
CheckReport check_outside(const Family& f, const Region& d, int n,
                          const Tolerance& tol);

DissectionResult dissect(const Family& f, const Region& d, const Region& y,
                         const Tolerance& eps, const Limits& limits = {},
                         bool override_checks = false);

CheckReport verify(const Region& d, const Family& f, const Region& x,
                   const Tolerance& tol);

}  // namespace simdis

#endif
