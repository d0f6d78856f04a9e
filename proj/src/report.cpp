#include "simdis/report.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

namespace simdis {
namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

}  // namespace

std::string format_region(const Region& r, const std::string& key) {
    std::ostringstream out;
    out << key << " rings " << r.ring_count() << "\n";
    for (const auto& ring : r.rings()) {
        out << "ring " << ring.size() << "\n";
        for (Vec2 p : ring) out << num(p.x) << " " << num(p.y) << "\n";
    }
    return out.str();
}

std::string format_check_report(const CheckReport& rep) {
    std::ostringstream out;
    out << "simdis-check v1\n";
    out << "theorem " << theorem_name(rep.theorem) << "\n";
    out << "overall " << (rep.overall ? "pass" : "fail") << "\n";
    out << "conditions " << rep.conditions.size() << "\n";
    for (const auto& c : rep.conditions)
        out << (c.pass ? "pass " : "FAIL ") << c.name << " measured "
            << num(c.measured_area) << " threshold " << num(c.threshold) << "\n";
    if (!rep.piece_areas.empty()) {
        out << "piece_areas";
        for (double a : rep.piece_areas) out << " " << num(a);
        out << "\n";
    }
    for (const auto& [name, region] : rep.witnesses)
        out << "witness " << name << " area " << num(region.area()) << "\n";
    return out.str();
}

std::string format_dissection_result(const DissectionResult& res) {
    std::ostringstream out;
    out << "simdis-result v1\n";
    out << "depth_used " << res.depth_used << "\n";
    out << "uncovered_area " << num(res.uncovered_area) << "\n";
    out << "overlap_area " << num(res.overlap_area) << "\n";
    out << "area_ratios";
    for (double a : res.area_ratios) out << " " << num(a);
    out << "\n";
    out << "pieces " << res.pieces.size() << "\n";
    for (std::size_t i = 0; i < res.pieces.size(); ++i)
        out << format_region(res.pieces[i], "piece " + std::to_string(i));
    return out.str();
}

DissectionResult parse_dissection_result(std::istream& in) {
    DissectionResult res;
    std::string line;
    if (!std::getline(in, line) || line != "simdis-result v1")
        throw GeometryError("not a simdis-result stream");

    std::size_t piece_count = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "depth_used") {
            ls >> res.depth_used;
        } else if (key == "uncovered_area") {
            ls >> res.uncovered_area;
        } else if (key == "overlap_area") {
            ls >> res.overlap_area;
        } else if (key == "area_ratios") {
            double v;
            while (ls >> v) res.area_ratios.push_back(v);
        } else if (key == "pieces") {
            ls >> piece_count;
        } else if (key == "piece") {
            std::size_t index, rings;
            std::string tag;
            ls >> index >> tag >> rings;
            std::vector<std::vector<Vec2>> ring_list;
            for (std::size_t r = 0; r < rings; ++r) {
                if (!std::getline(in, line)) throw GeometryError("truncated result");
                std::istringstream rs(line);
                std::string rtag;
                std::size_t npts = 0;
                rs >> rtag >> npts;
                if (rtag != "ring") throw GeometryError("malformed result ring");
                std::vector<Vec2> ring;
                ring.reserve(npts);
                for (std::size_t k = 0; k < npts; ++k) {
                    if (!std::getline(in, line))
                        throw GeometryError("truncated result");
                    std::istringstream ps(line);
                    Vec2 p;
                    if (!(ps >> p.x >> p.y))
                        throw GeometryError("malformed result point");
                    ring.push_back(p);
                }
                ring_list.push_back(std::move(ring));
            }
            res.pieces.push_back(Region::from_rings(ring_list));
        }
    }
    if (res.pieces.size() != piece_count)
        throw GeometryError("result piece count mismatch");
    if (!res.pieces.empty()) res.generator = res.pieces.front();
    return res;
}

}  // namespace simdis
