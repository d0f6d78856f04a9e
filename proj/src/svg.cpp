#include "simdis/svg.hpp"

#include <cstdio>
#include <sstream>

namespace simdis {
namespace svg {
namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v == 0.0 ? 0.0 : v);
    return buf;
}

// y-flip happens here: the document draws in paper orientation
void append_region_path(std::ostringstream& out, const Region& r, double ymax) {
    out << "<path d=\"";
    for (const auto& ring : r.rings()) {
        for (std::size_t i = 0; i < ring.size(); ++i)
            out << (i == 0 ? "M" : "L") << num(ring[i].x) << " "
                << num(ymax - ring[i].y);
        out << "Z";
    }
    out << "\"";
}

struct Frame {
    Vec2 lo, hi;
    double pad;
};

Frame frame_of(const Region& domain) {
    Frame f;
    domain.bounds(f.lo, f.hi);
    f.pad = 0.05 * std::max(f.hi.x - f.lo.x, f.hi.y - f.lo.y);
    return f;
}

}  // namespace

std::string render_dissection(const Region& domain, const std::vector<Region>& pieces,
                              const RenderOptions& opts) {
    if (pieces.empty()) throw GeometryError("render: no pieces to draw");
    bool any = false;
    for (const auto& p : pieces) any = any || !p.empty();
    if (!any) throw GeometryError("render: all pieces are empty");
    if (domain.empty()) throw GeometryError("render: empty domain");

    Frame fr = frame_of(domain);
    double w = fr.hi.x - fr.lo.x + 2 * fr.pad;
    double h = fr.hi.y - fr.lo.y + 2 * fr.pad;
    double ymax = fr.hi.y + fr.pad;
    double xmin = fr.lo.x - fr.pad;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << opts.width_px << "\" height=\""
        << static_cast<int>(opts.width_px * h / w) << "\" viewBox=\"" << num(xmin)
        << " 0 " << num(w) << " " << num(h) << "\">\n";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].empty()) continue;
        append_region_path(out, pieces[i], ymax);
        out << " fill=\"" << opts.palette[i % opts.palette.size()]
            << "\" fill-rule=\"evenodd\" stroke=\"#222222\" stroke-width=\""
            << num(opts.stroke_width) << "\"/>\n";
    }
    append_region_path(out, domain, ymax);
    out << " fill=\"none\" stroke=\"#000000\" stroke-width=\""
        << num(2.0 * opts.stroke_width) << "\"/>\n";
    if (opts.include_attractor) {
        for (Vec2 p : opts.attractor)
            out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(ymax - p.y)
                << "\" r=\"" << num(opts.stroke_width) << "\" fill=\"#000000\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_panels(const Region& domain, const std::vector<Panel>& panels,
                          const RenderOptions& opts) {
    if (panels.empty()) throw GeometryError("render: no panels");
    if (domain.empty()) throw GeometryError("render: empty domain");

    Frame fr = frame_of(domain);
    double w = fr.hi.x - fr.lo.x + 2 * fr.pad;
    double h = fr.hi.y - fr.lo.y + 2 * fr.pad;
    double ymax = fr.hi.y + fr.pad;
    double xmin = fr.lo.x - fr.pad;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << opts.width_px * static_cast<int>(panels.size()) << "\" height=\""
        << static_cast<int>(opts.width_px * h / w) << "\" viewBox=\"0 0 "
        << num(w * panels.size()) << " " << num(h) << "\">\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        out << "<g transform=\"translate(" << num(i * w - xmin) << " 0)\">\n";
        out << "<text x=\"" << num(xmin + fr.pad) << "\" y=\""
            << num(fr.pad + 0.06 * h) << "\" font-size=\"" << num(0.05 * h)
            << "\">" << panels[i].label << "</text>\n";
        append_region_path(out, domain, ymax);
        out << " fill=\"none\" stroke=\"#999999\" stroke-width=\""
            << num(opts.stroke_width) << "\"/>\n";
        if (!panels[i].region.empty()) {
            append_region_path(out, panels[i].region, ymax);
            out << " fill=\"" << opts.palette[i % opts.palette.size()]
                << "\" fill-rule=\"evenodd\" stroke=\"#222222\" stroke-width=\""
                << num(opts.stroke_width) << "\"/>\n";
        }
        for (Vec2 p : panels[i].points)
            out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(ymax - p.y)
                << "\" r=\"" << num(opts.stroke_width) << "\" fill=\"#000000\"/>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace svg
}  // namespace simdis
