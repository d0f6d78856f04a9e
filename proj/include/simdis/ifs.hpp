#ifndef SIMDIS_IFS_HPP
#define SIMDIS_IFS_HPP

#include <string>
#include <vector>

#include "simdis/geometry.hpp"

namespace simdis {

// Iterated function system {f_1,...,f_k}; carries the one-step image
// operator Phi(X) = f_1(X) u ... u f_k(X).
struct Family {
    std::vector<Similarity> maps;
    std::string label;

    std::size_t size() const { return maps.size(); }
    // Area contraction factor of Phi: sum of ratio_i^2.
    double area_factor() const;
    double max_ratio() const;
};

// All depth-length compositions of the family.
Family composed_square(const Family& f);

struct Limits {
    int depth_cap = 64;
    std::size_t piece_cap = 1'000'000;
};

Region phi(const Family& f, const Region& r);
Region phi_pow(const Family& f, const Region& r, int n, const Limits& limits = {});

// Point-cloud approximation of the attractor E: the k^depth images of a
// seed point under all depth-length compositions. Every returned point lies
// within diameter_bound of E.
struct AttractorApprox {
    std::vector<Vec2> points;
    int depth = 0;
    double diameter_bound = 0.0;
};

AttractorApprox attractor_points(const Family& f, int depth, Vec2 seed,
                                 const Limits& limits = {});

// For similarities the attractor is null iff sum r_i^2 < 1; this is the sole
// criterion here, the Phi(D) != D hypothesis is reported by the checkers.
bool attractor_null_test(const Family& f, const Region& d, const Tolerance& tol);

// Truncated attractor A u Phi(A) u ... u Phi^N(A) of the IFS with
// condensation A, with N chosen from the geometric tail bound so that both
// the residual area and the residual Hausdorff distance fall under eps.
// Families with area_factor >= 1 are refused unless depth_override >= 0.
Region condensation_attractor(const Family& f, const Region& a, const Tolerance& eps,
                              const Limits& limits = {}, int depth_override = -1);

}  // namespace simdis

#endif
