#include "simdis/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "simdis/report.hpp"
#include "simdis/svg.hpp"

namespace simdis {
namespace cli {
namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Angles accept radians ("1.57"), degree suffix ("90deg") and pi fractions
// ("2pi/3", "pi/2", "-pi").
double parse_angle(std::string s) {
    auto trim = [](std::string& t) {
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
    };
    trim(s);
    if (s.empty()) throw ConfigError("empty angle");
    if (s.size() > 3 && s.substr(s.size() - 3) == "deg")
        return std::stod(s.substr(0, s.size() - 3)) * std::numbers::pi / 180.0;
    auto pos = s.find("pi");
    if (pos == std::string::npos) return std::stod(s);
    std::string coef = s.substr(0, pos);
    std::string rest = s.substr(pos + 2);
    double c = 1.0;
    if (coef == "-")
        c = -1.0;
    else if (!coef.empty())
        c = std::stod(coef);
    double denom = 1.0;
    if (!rest.empty()) {
        if (rest[0] != '/') throw ConfigError("malformed angle: " + s);
        denom = std::stod(rest.substr(1));
    }
    return c * std::numbers::pi / denom;
}

std::vector<Vec2> parse_point_list(const std::string& s) {
    std::vector<Vec2> pts;
    std::istringstream in(s);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        std::istringstream ps(chunk);
        std::string xs, ys;
        if (!std::getline(ps, xs, ',') || !std::getline(ps, ys))
            throw ConfigError("malformed point list entry: " + chunk);
        pts.emplace_back(std::stod(xs), std::stod(ys));
    }
    if (pts.size() < 3) throw ConfigError("polygon needs at least 3 points");
    return pts;
}

// map entry: ratio, angle, reflect(0/1), tx, ty
Similarity parse_map(const std::string& s) {
    std::vector<std::string> parts;
    std::istringstream in(s);
    std::string chunk;
    while (std::getline(in, chunk, ',')) parts.push_back(chunk);
    if (parts.size() != 5) throw ConfigError("map entry needs 5 fields: " + s);
    return Similarity(std::stod(parts[0]), parse_angle(parts[1]),
                      std::stod(parts[2]) != 0.0,
                      Vec2{std::stod(parts[3]), std::stod(parts[4])});
}

struct RunConfig {
    std::string command;
    std::string preset;
    double r = 0.5;
    int n = 1;
    std::optional<double> area_eps;  // absolute override
    double hausdorff_eps = 1e-6;
    int depth_cap = 64;
    bool override_checks = false;
    bool stages = false;
    std::string out_path;
    std::string svg_path;
    double sweep_lo = 0.0, sweep_hi = 0.0, sweep_step = 0.01;
    // inline specification
    std::optional<Region> inline_domain;
    std::optional<Family> inline_family;
    std::optional<Region> inline_y;
};

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line, section;
    std::vector<Vec2> domain_pts, y_pts;
    Family fam;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line.erase(0, line.find_first_not_of(" \t"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value: " + line);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        key.erase(key.find_last_not_of(" \t") + 1);
        val.erase(0, val.find_first_not_of(" \t"));
        if (section.empty()) {
            if (key == "command") cfg.command = val;
            else if (key == "preset") cfg.preset = val;
            else if (key == "r") cfg.r = std::stod(val);
            else if (key == "n") cfg.n = std::stoi(val);
            else if (key == "area_eps") cfg.area_eps = std::stod(val);
            else if (key == "hausdorff_eps") cfg.hausdorff_eps = std::stod(val);
            else if (key == "depth_cap") cfg.depth_cap = std::stoi(val);
            else if (key == "override") cfg.override_checks = (val == "true" || val == "1");
            else if (key == "stages") cfg.stages = (val == "true" || val == "1");
            else if (key == "out") cfg.out_path = val;
            else if (key == "svg") cfg.svg_path = val;
            else if (key == "lo") cfg.sweep_lo = std::stod(val);
            else if (key == "hi") cfg.sweep_hi = std::stod(val);
            else if (key == "step") cfg.sweep_step = std::stod(val);
            else throw ConfigError("unknown config key: " + key);
        } else if (section == "domain") {
            if (key == "polygon") domain_pts = parse_point_list(val);
            else throw ConfigError("unknown [domain] key: " + key);
        } else if (section == "family") {
            if (key == "map") fam.maps.push_back(parse_map(val));
            else if (key == "label") fam.label = val;
            else throw ConfigError("unknown [family] key: " + key);
        } else if (section == "y") {
            if (key == "polygon") y_pts = parse_point_list(val);
            else throw ConfigError("unknown [y] key: " + key);
        } else {
            throw ConfigError("unknown config section: " + section);
        }
    }
    if (!domain_pts.empty()) cfg.inline_domain = Region::polygon(domain_pts);
    if (!fam.maps.empty()) cfg.inline_family = fam;
    if (!y_pts.empty()) cfg.inline_y = Region::polygon(y_pts);
}

struct Problem {
    Region domain;
    Family family;
    std::optional<Region> seed_y;
    TheoremId checker = TheoremId::InsideNonOverlapping;
    int outside_depth = 1;
    std::optional<Region> known_generator;
    std::string label;
};

Problem resolve_problem(const RunConfig& cfg) {
    bool has_inline = cfg.inline_domain.has_value() || cfg.inline_family.has_value();
    if (!cfg.preset.empty() && has_inline)
        throw ConfigError("give either a preset or an inline specification, not both");
    Problem pb;
    if (!cfg.preset.empty()) {
        presets::Preset p = presets::build(cfg.preset, cfg.r);
        pb.domain = p.domain;
        pb.family = p.family;
        pb.seed_y = p.seed_y;
        pb.checker = p.checker;
        pb.outside_depth = cfg.n > 0 ? cfg.n : p.outside_depth;
        pb.known_generator = p.known_generator;
        pb.label = p.name;
    } else {
        if (!cfg.inline_domain || !cfg.inline_family)
            throw ConfigError("inline runs need both [domain] and [family]");
        pb.domain = *cfg.inline_domain;
        pb.family = *cfg.inline_family;
        pb.checker = cfg.inline_y ? TheoremId::MainWithY
                                  : TheoremId::InsideNonOverlapping;
        pb.label = pb.family.label.empty() ? "inline" : pb.family.label;
    }
    if (cfg.inline_y) pb.seed_y = cfg.inline_y;
    return pb;
}

Tolerance tolerance_for(const RunConfig& cfg, const Region& domain) {
    Tolerance tol;
    tol.area_eps = cfg.area_eps ? *cfg.area_eps : 1e-9 * domain.area();
    tol.hausdorff_eps = cfg.hausdorff_eps;
    return tol;
}

// target for the geometric tail of dissect(); looser by default than the
// checker tolerance, which would force an impractical iteration depth
Tolerance dissect_eps_for(const RunConfig& cfg, const Region& domain) {
    Tolerance eps = tolerance_for(cfg, domain);
    if (!cfg.area_eps) eps.area_eps = 1e-6 * domain.area();
    return eps;
}

void write_or_print(const std::string& text, const std::string& path,
                    std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write output file: " + path);
    f << text;
}

CheckReport check_problem(const Problem& pb, const Tolerance& tol, int n) {
    switch (pb.checker) {
        case TheoremId::InsideNonOverlapping:
            return check_inside_nonoverlapping(pb.family, pb.domain, tol);
        case TheoremId::MainWithY: {
            Region y = pb.seed_y ? *pb.seed_y : compute_seed_Y(pb.family, pb.domain);
            return check_main(pb.family, pb.domain, y, tol);
        }
        case TheoremId::OutsideCorollary:
            return check_outside(pb.family, pb.domain, n, tol);
        case TheoremId::DissectionVerify:
            if (!pb.known_generator)
                throw ConfigError("verify checker needs a known generator");
            return verify(pb.domain, pb.family, *pb.known_generator, tol);
    }
    throw ConfigError("unreachable checker");
}

Region seed_for_dissect(const Problem& pb, const CheckReport& rep) {
    if (pb.checker == TheoremId::OutsideCorollary && rep.constructed_y)
        return *rep.constructed_y;
    if (pb.seed_y) return *pb.seed_y;
    if (pb.checker == TheoremId::MainWithY)
        return compute_seed_Y(pb.family, pb.domain);
    return Region();
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    Problem pb = resolve_problem(cfg);
    Tolerance tol = tolerance_for(cfg, pb.domain);
    CheckReport rep = check_problem(pb, tol, cfg.n);
    write_or_print(format_check_report(rep), cfg.out_path, out);
    return rep.overall ? kExitPass : kExitCheckFail;
}

int cmd_dissect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Problem pb = resolve_problem(cfg);
    Tolerance tol = tolerance_for(cfg, pb.domain);
    Limits limits;
    limits.depth_cap = cfg.depth_cap;

    CheckReport rep = check_problem(pb, tol, cfg.n);
    if (!rep.overall && !cfg.override_checks) {
        err << "checker failed; re-run with --override for a best-effort result\n";
        err << format_check_report(rep);
        return kExitCheckFail;
    }
    Region y = seed_for_dissect(pb, rep);
    DissectionResult res = dissect(pb.family, pb.domain, y,
                                   dissect_eps_for(cfg, pb.domain), limits,
                                   cfg.override_checks);
    write_or_print(format_dissection_result(res), cfg.out_path, out);
    if (!cfg.svg_path.empty()) {
        svg::RenderOptions opts;
        write_or_print(svg::render_dissection(pb.domain, res.pieces, opts),
                       cfg.svg_path, out);
    }
    return kExitPass;
}

int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Problem pb = resolve_problem(cfg);
    Tolerance tol = tolerance_for(cfg, pb.domain);
    Limits limits;
    limits.depth_cap = cfg.depth_cap;

    std::string path = cfg.out_path.empty() ? cfg.svg_path : cfg.out_path;
    if (cfg.stages) {
        Region y = pb.seed_y ? *pb.seed_y : compute_seed_Y(pb.family, pb.domain);
        std::vector<svg::Panel> panels;
        Region cur = y;
        for (int i = 0; i <= 4; ++i) {
            panels.push_back({"phi^" + std::to_string(i), cur, {}});
            cur = phi(pb.family, cur);
        }
        AttractorApprox att =
            attractor_points(pb.family, 9, Vec2{0.25, 0.25}, limits);
        panels.push_back({"attractor", Region(), att.points});
        write_or_print(svg::render_panels(pb.domain, panels), path, out);
        return kExitPass;
    }

    std::vector<Region> pieces;
    if (pb.known_generator) {
        pieces.push_back(*pb.known_generator);
        for (const auto& m : pb.family.maps)
            pieces.push_back(transform(m, *pb.known_generator));
    } else {
        CheckReport rep = check_problem(pb, tol, cfg.n);
        if (!rep.overall && !cfg.override_checks) {
            err << "checker failed; re-run with --override to render anyway\n";
            err << format_check_report(rep);
            return kExitCheckFail;
        }
        DissectionResult res =
            dissect(pb.family, pb.domain, seed_for_dissect(pb, rep),
                    dissect_eps_for(cfg, pb.domain), limits, cfg.override_checks);
        pieces = res.pieces;
    }
    write_or_print(svg::render_dissection(pb.domain, pieces), path, out);
    return kExitPass;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    if (cfg.preset.empty())
        throw ConfigError("sweep needs a --preset with a scalar parameter");
    if (!presets::is_parametric(cfg.preset))
        throw ConfigError("preset " + cfg.preset + " has no scalar parameter");
    double lo = cfg.sweep_lo, hi = cfg.sweep_hi;
    if (!(hi > lo)) throw ConfigError("sweep needs lo < hi");

    SweepResult sw = sweep_preset(cfg.preset, lo, hi, cfg.sweep_step);
    std::ostringstream os;
    os << "simdis-sweep v1\n";
    os << "preset " << cfg.preset << "\n";
    for (std::size_t i = 0; i < sw.grid_r.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "r %.17g %s\n", sw.grid_r[i],
                      sw.grid_pass[i] ? "pass" : "fail");
        os << buf;
    }
    if (sw.bracket_found) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "threshold %.17g\n", sw.threshold_estimate);
        os << buf;
    } else {
        os << "threshold none\n";
    }
    write_or_print(os.str(), cfg.out_path, out);
    return sw.bracket_found ? kExitPass : kExitCheckFail;
}

}  // namespace

CheckReport designated_check(const presets::Preset& p, const Tolerance& tol) {
    Problem pb;
    pb.domain = p.domain;
    pb.family = p.family;
    pb.seed_y = p.seed_y;
    pb.checker = p.checker;
    pb.known_generator = p.known_generator;
    return check_problem(pb, tol, p.outside_depth);
}

Region dissection_seed(const presets::Preset& p, const Tolerance& tol) {
    if (p.checker == TheoremId::OutsideCorollary) {
        CheckReport rep = check_outside(p.family, p.domain, p.outside_depth, tol);
        return rep.constructed_y ? *rep.constructed_y : Region();
    }
    if (p.seed_y) return *p.seed_y;
    if (p.checker == TheoremId::MainWithY) return compute_seed_Y(p.family, p.domain);
    return Region();
}

SweepResult sweep_preset(const std::string& name, double lo, double hi, double step,
                         double refine_to) {
    SweepResult sw;
    auto passes = [&](double r) {
        presets::Preset p = presets::build(name, r);
        // tight tolerance so the bisection can resolve the transition
        Tolerance tol;
        tol.area_eps = 1e-13 * p.domain.area();
        return designated_check(p, tol).overall;
    };

    double last_pass = std::numeric_limits<double>::quiet_NaN();
    double first_fail = std::numeric_limits<double>::quiet_NaN();
    for (double r = lo; r <= hi + 1e-12; r += step) {
        double rc = std::min(r, hi);
        bool ok = passes(rc);
        sw.grid_r.push_back(rc);
        sw.grid_pass.push_back(ok);
        if (ok) {
            last_pass = rc;
        } else if (!std::isnan(last_pass) && std::isnan(first_fail)) {
            first_fail = rc;
        }
    }
    if (std::isnan(last_pass) || std::isnan(first_fail) || first_fail < last_pass)
        return sw;

    double a = last_pass, b = first_fail;
    while (b - a > refine_to) {
        double mid = 0.5 * (a + b);
        if (passes(mid))
            a = mid;
        else
            b = mid;
    }
    sw.threshold_estimate = a;
    sw.bracket_found = true;
    return sw;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"self-similar dissection toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, y_inline, domain_inline;
    std::vector<std::string> map_inline;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "structured-text config file");
        sub->add_option("--preset", cfg.preset, "preset name");
        sub->add_option("--r", cfg.r, "contraction ratio parameter");
        sub->add_option("--n", cfg.n, "outside-criterion depth");
        sub->add_option("--eps", cfg.area_eps, "absolute area epsilon");
        sub->add_option("--hausdorff-eps", cfg.hausdorff_eps, "Hausdorff epsilon");
        sub->add_option("--depth-cap", cfg.depth_cap, "iteration depth cap");
        sub->add_flag("--override", cfg.override_checks,
                      "proceed despite a failing checker");
        sub->add_option("--out", cfg.out_path, "output path");
        sub->add_option("--svg", cfg.svg_path, "SVG output path");
        sub->add_option("--y", y_inline, "inline Y polygon x,y;x,y;...");
        sub->add_option("--domain", domain_inline, "inline domain polygon");
        sub->add_option("--map", map_inline,
                        "inline family map: ratio,angle,reflect,tx,ty");
    };

    CLI::App* c_check = app.add_subcommand("check", "run a theorem checker");
    CLI::App* c_dissect = app.add_subcommand("dissect", "construct a dissection");
    CLI::App* c_render = app.add_subcommand("render", "render figures as SVG");
    CLI::App* c_sweep = app.add_subcommand("sweep", "scan r and locate the threshold");
    for (auto* sub : {c_check, c_dissect, c_render, c_sweep}) add_common(sub);
    c_render->add_flag("--stages", cfg.stages, "render iteration stages");
    c_sweep->add_option("--lo", cfg.sweep_lo, "sweep lower bound")->required();
    c_sweep->add_option("--hi", cfg.sweep_hi, "sweep upper bound")->required();
    c_sweep->add_option("--step", cfg.sweep_step, "sweep grid step");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    storage.insert(storage.begin(), "simdis");
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitPass;
        }
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (!config_path.empty()) load_config_file(config_path, cfg);
        if (!domain_inline.empty())
            cfg.inline_domain = Region::polygon(parse_point_list(domain_inline));
        if (!y_inline.empty())
            cfg.inline_y = Region::polygon(parse_point_list(y_inline));
        if (!map_inline.empty()) {
            Family fam;
            for (const auto& m : map_inline) fam.maps.push_back(parse_map(m));
            cfg.inline_family = fam;
        }

        if (c_check->parsed()) return cmd_check(cfg, out);
        if (c_dissect->parsed()) return cmd_dissect(cfg, out, err);
        if (c_render->parsed()) return cmd_render(cfg, out, err);
        if (c_sweep->parsed()) return cmd_sweep(cfg, out);
        err << "no subcommand given\n";
        return kExitUsage;
    } catch (const DissectRefused& refused) {
        err << "dissect refused by its precondition checker\n";
        err << format_check_report(refused.report);
        return kExitCheckFail;
    } catch (const ResourceError& e) {
        err << "resource cap exceeded: " << e.what() << "\n";
        return kExitResource;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GeometryError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace cli
}  // namespace simdis
