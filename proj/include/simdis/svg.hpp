#ifndef SIMDIS_SVG_HPP
#define SIMDIS_SVG_HPP

#include <string>
#include <vector>

#include "simdis/dissection.hpp"

namespace simdis {
namespace svg {

struct RenderOptions {
    double stroke_width = 0.004;
    std::vector<std::string> palette = {"#4878cf", "#e24a33", "#6acc65",
                                        "#d5bb67", "#956cb4", "#8c613c"};
    bool include_attractor = false;
    std::vector<Vec2> attractor;
    int width_px = 640;
};

// Deterministic SVG 1.1 document: the outline of D plus the colored pieces,
// y-axis flipped so figures read the usual way up.
std::string render_dissection(const Region& domain, const std::vector<Region>& pieces,
                              const RenderOptions& opts = {});

// Side-by-side panels (e.g. Y, Phi(Y), Phi^2(Y), ..., attractor points).
struct Panel {
    std::string label;
    Region region;
    std::vector<Vec2> points;
};
std::string render_panels(const Region& domain, const std::vector<Panel>& panels,
                          const RenderOptions& opts = {});

}  // namespace svg
}  // namespace simdis

#endif
