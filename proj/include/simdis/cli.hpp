#ifndef SIMDIS_CLI_HPP
#define SIMDIS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "simdis/presets.hpp"

namespace simdis {
namespace cli {

// exit-code contract
constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

// Runs the preset's designated checker (inside / main-with-Y / outside /
// verify) with the given tolerance.
CheckReport designated_check(const presets::Preset& p, const Tolerance& tol);

// The Y handed to dissect() for a preset: the explicit seed where the paper
// gives one, the outside construction where the outside checker applies,
// empty otherwise.
Region dissection_seed(const presets::Preset& p, const Tolerance& tol);

struct SweepResult {
    std::vector<double> grid_r;
    std::vector<bool> grid_pass;
    // last passing grid point refined by bisection
    double threshold_estimate = 0.0;
    bool bracket_found = false;
};

SweepResult sweep_preset(const std::string& name, double lo, double hi, double step,
                         double refine_to = 1e-7);

// Full command-line front end; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace simdis

#endif
