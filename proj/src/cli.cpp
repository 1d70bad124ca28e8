#include "klein/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klein/oval.hpp"
#include "klein/scene.hpp"
#include "klein/svg.hpp"
#include "klein/verify.hpp"

namespace klein {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;  // failed checks or failed constructions
constexpr int exit_usage = 2;    // malformed invocations

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::construction, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error(errc::construction, path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::construction, "cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw error(errc::construction, "cannot write " + path);
}

const FinitePoint& scene_point(const Scene& s, const std::string& name) {
    auto it = s.points.find(name);
    if (it == s.points.end())
        throw error(errc::precondition, "no point named \"" + name + "\" in the scene");
    return it->second;
}

const Rimpoint& scene_rim(const Scene& s, const std::string& name) {
    auto it = s.rimpoints.find(name);
    if (it == s.rimpoints.end())
        throw error(errc::precondition, "no rimpoint named \"" + name + "\" in the scene");
    return it->second;
}

const Line& scene_line(const Scene& s, const std::string& name) {
    auto it = s.lines.find(name);
    if (it == s.lines.end())
        throw error(errc::precondition, "no line named \"" + name + "\" in the scene");
    return it->second;
}

// A name resolved across all three object groups, for the apply operations.
struct AnyObject {
    std::optional<FinitePoint> point;
    std::optional<Rimpoint> rim;
    std::optional<Line> line;
};

AnyObject scene_any(const Scene& s, const std::string& name) {
    AnyObject o;
    int hits = 0;
    if (auto it = s.points.find(name); it != s.points.end()) { o.point = it->second; ++hits; }
    if (auto it = s.rimpoints.find(name); it != s.rimpoints.end()) { o.rim = it->second; ++hits; }
    if (auto it = s.lines.find(name); it != s.lines.end()) { o.line = it->second; ++hits; }
    if (hits == 0) throw error(errc::precondition, "no object named \"" + name + "\" in the scene");
    if (hits > 1)
        throw error(errc::precondition, "the name \"" + name + "\" is ambiguous in the scene");
    return o;
}

json apply_motion_json(const Motion& g, const AnyObject& o) {
    if (o.point) return point_json(motion_apply(g, *o.point), true);
    if (o.rim) return rimpoint_json(motion_apply(g, *o.rim), true);
    return line_json(motion_apply(g, *o.line), true);
}

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 0;
    long trials = 0;
    std::string sabotage = "none";
    std::string json_path;
};

int cmd_verify(const VerifyOptions& opt) {
    const Sabotage sab = *sabotage_from_name(opt.sabotage);
    TrialConfig cfg;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;

    std::vector<std::string> suites;
    if (opt.suite == "all")
        suites = {"axioms", "theorems", "metric", "oval-sample"};
    else
        suites = {opt.suite};

    Report combined;
    for (const std::string& s : suites) {
        Report r;
        if (s == "axioms")
            r = run_axiom_suite(cfg, sab);
        else if (s == "theorems")
            r = run_theorem_suite(cfg, sab);
        else if (s == "metric")
            r = run_metric_plane_suite(cfg, sab);
        else
            r = sample_hyperbolic_oval(cfg, sab);
        combined.overall = combined.overall && r.overall;
        for (CheckResult& c : r.checks) combined.checks.push_back(std::move(c));
    }

    for (const CheckResult& c : combined.checks)
        std::cout << (c.failures == 0 ? "pass  " : "FAIL  ") << c.name << "  trials="
                  << c.trials_run << " failures=" << c.failures
                  << " rejections=" << c.rejections << "\n";
    std::cout << (combined.overall ? "overall: pass" : "overall: FAIL") << "\n";

    if (!opt.json_path.empty()) write_text_file(opt.json_path, report_json(combined));
    return combined.overall ? exit_ok : exit_failure;
}

struct ConstructOptions {
    std::string op;
    std::string scene_path;
    std::vector<std::string> args;
    std::string out_path;
};

int cmd_construct(const ConstructOptions& opt) {
    struct OpSpec {
        std::size_t min_args;
        std::size_t max_args;
        const char* usage;
    };
    static const std::map<std::string, OpSpec> specs = {
        {"midpoint", {2, 2, "midpoint P Q"}},
        {"collinear_third", {3, 3, "collinear_third P Q R"}},
        {"bowtie", {2, 2, "bowtie L M"}},
        {"perp_at_point", {2, 2, "perp_at_point L P"}},
        {"perp_through_point", {2, 2, "perp_through_point L P"}},
        {"common_perpendicular", {2, 2, "common_perpendicular L M"}},
        {"bisector", {2, 3, "bisector L M [straight|crossed]"}},
        {"a11_foot", {2, 2, "a11_foot L A"}},
        {"reflection-apply", {2, 2, "reflection-apply L X"}},
        {"axial-apply", {3, 3, "axial-apply P Q X"}},
        {"glide_normalize", {3, 3, "glide_normalize A E D"}},
    };

    auto spec = specs.find(opt.op);
    if (spec == specs.end()) {
        std::cerr << "unknown operation \"" << opt.op << "\"; one of:";
        for (const auto& [name, unused] : specs) std::cerr << " " << name;
        std::cerr << "\n";
        return exit_usage;
    }
    if (opt.args.size() < spec->second.min_args || opt.args.size() > spec->second.max_args) {
        std::cerr << "usage: construct " << spec->second.usage << "\n";
        return exit_usage;
    }
    EndPairing pairing = EndPairing::Straight;
    if (opt.op == "bisector" && opt.args.size() == 3) {
        if (opt.args[2] == "crossed")
            pairing = EndPairing::Crossed;
        else if (opt.args[2] != "straight") {
            std::cerr << "usage: construct " << spec->second.usage << "\n";
            return exit_usage;
        }
    }

    const Scene scene = scene_from_json(read_json_file(opt.scene_path));
    const std::vector<std::string>& a = opt.args;

    json result;
    if (opt.op == "midpoint")
        result = point_json(midpoint(scene_point(scene, a[0]), scene_point(scene, a[1])), true);
    else if (opt.op == "collinear_third")
        result = point_json(collinear_third(scene_point(scene, a[0]), scene_point(scene, a[1]),
                                            scene_point(scene, a[2])),
                            true);
    else if (opt.op == "bowtie")
        result = point_json(bowtie(scene_line(scene, a[0]), scene_line(scene, a[1])), true);
    else if (opt.op == "perp_at_point")
        result = line_json(perp_at_point(scene_line(scene, a[0]), scene_point(scene, a[1])), true);
    else if (opt.op == "perp_through_point")
        result =
            line_json(perp_through_point(scene_line(scene, a[0]), scene_point(scene, a[1])), true);
    else if (opt.op == "common_perpendicular")
        result = line_json(common_perpendicular(scene_line(scene, a[0]), scene_line(scene, a[1])),
                           true);
    else if (opt.op == "bisector")
        result =
            line_json(bisector(scene_line(scene, a[0]), scene_line(scene, a[1]), pairing), true);
    else if (opt.op == "a11_foot")
        result = point_json(a11_foot(scene_line(scene, a[0]), scene_rim(scene, a[1])), true);
    else if (opt.op == "reflection-apply")
        result = apply_motion_json(reflection(scene_line(scene, a[0])), scene_any(scene, a[1]));
    else if (opt.op == "axial-apply")
        result = apply_motion_json(axial(scene_point(scene, a[0]), scene_point(scene, a[1])),
                                   scene_any(scene, a[2]));
    else {
        const GlideForm g = glide_normalize(scene_point(scene, a[0]), scene_point(scene, a[1]),
                                            scene_line(scene, a[2]));
        result = json{{"point", point_json(g.point, true)}, {"mirror", line_json(g.mirror, true)}};
    }

    const std::string text = result.dump(2) + "\n";
    if (!opt.out_path.empty())
        write_text_file(opt.out_path, text);
    else
        std::cout << text;
    return exit_ok;
}

struct RenderOptions {
    std::string scene_path;
    std::string out_path;
    int size = 512;
};

int cmd_render(const RenderOptions& opt) {
    const Scene scene = scene_from_json(read_json_file(opt.scene_path));
    write_text_file(opt.out_path, render_svg(scene, opt.size));
    return exit_ok;
}

struct OvalOptions {
    long p = 0;
    std::string check = "all";
    std::string json_path;
};

bool incidence_counts_ok(const OvalIncidence& inc, long p) {
    if (inc.point_count != (p + 1) + p * p) return false;
    if (static_cast<long>(inc.secants.size()) != p * (p + 1) / 2) return false;
    if (static_cast<long>(inc.tangents.size()) != p + 1) return false;
    for (const OvalLine& l : inc.secants)
        if (static_cast<long>(l.members.size()) != p - 1) return false;
    for (const OvalLine& l : inc.tangents)
        if (static_cast<long>(l.members.size()) != p) return false;
    return true;
}

int cmd_oval(const OvalOptions& opt) {
    std::vector<std::string> names;
    if (opt.check == "all")
        names = {"oval", "pascal", "regular", "incidence", "involution-model"};
    else
        names = {opt.check};

    const AbstractOval b = conic_oval(opt.p);
    json checks = json::array();
    bool overall = true;
    for (const std::string& n : names) {
        bool pass = false;
        if (n == "oval")
            pass = verify_abstract_oval(b);
        else if (n == "pascal")
            pass = secants_pascalian(b);
        else if (n == "regular")
            pass = is_regular(b);
        else if (n == "incidence")
            pass = incidence_counts_ok(build_incidence(b), opt.p);
        else
            pass = involution_model(opt.p).ok();
        overall = overall && pass;
        checks.push_back(json{{"name", n}, {"pass", pass}});
        std::cout << (pass ? "pass  " : "FAIL  ") << n << "\n";
    }
    std::cout << (overall ? "overall: pass" : "overall: FAIL") << "\n";

    if (!opt.json_path.empty()) {
        const json doc{{"p", opt.p}, {"overall", overall}, {"checks", checks}};
        write_text_file(opt.json_path, doc.dump(2) + "\n");
    }
    return overall ? exit_ok : exit_failure;
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Exact Klein disk model of the hyperbolic plane"};
    app.require_subcommand(1);

    VerifyOptions vo;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the seeded property-based verification suites");
    verify_cmd->add_option("--suite", vo.suite, "suite to run")
        ->check(CLI::IsMember({"axioms", "theorems", "metric", "oval-sample", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--seed", vo.seed, "seed of the trial generator")->required();
    verify_cmd->add_option("--trials", vo.trials, "trials per sampled check")
        ->required()
        ->check(CLI::NonNegativeNumber);
    verify_cmd
        ->add_option("--sabotage", vo.sabotage, "run a deliberately broken variant of the model")
        ->check(CLI::IsMember(
            {"none", "euclidean-mirror", "skewed-halfturn", "dropped-bowtie-labeling"}));
    verify_cmd->add_option("--json", vo.json_path, "write the JSON report to this path");

    ConstructOptions co;
    CLI::App* construct_cmd =
        app.add_subcommand("construct", "Apply a named construction to scene objects");
    construct_cmd
        ->add_option("op", co.op,
                     "operation: midpoint, collinear_third, bowtie, perp_at_point, "
                     "perp_through_point, common_perpendicular, bisector, a11_foot, "
                     "reflection-apply, axial-apply or glide_normalize")
        ->required();
    construct_cmd->add_option("--scene", co.scene_path, "input scene JSON file")->required();
    construct_cmd->add_option("--args", co.args, "object names, in operation order")->required();
    construct_cmd->add_option("--out", co.out_path, "output file (default stdout)");

    RenderOptions ro;
    CLI::App* render_cmd = app.add_subcommand("render", "Draw a scene as SVG");
    render_cmd->add_option("--scene", ro.scene_path, "input scene JSON file")->required();
    render_cmd->add_option("--out", ro.out_path, "output SVG file")->required();
    render_cmd->add_option("--size", ro.size, "image width and height in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    OvalOptions oo;
    CLI::App* oval_cmd =
        app.add_subcommand("oval", "Check the finite oval induced by a conic over F_p");
    oval_cmd->add_option("--p", oo.p, "odd prime field order")
        ->required()
        ->check(CLI::Validator(
            [](std::string& s) -> std::string {
                try {
                    if (is_odd_prime(std::stol(s))) return {};
                } catch (...) {
                }
                return std::string("value ") + s + " is not an odd prime";
            },
            "ODD_PRIME"));
    oval_cmd->add_option("--check", oo.check, "check to run")
        ->check(CLI::IsMember({"oval", "pascal", "regular", "incidence", "involution-model", "all"}))
        ->capture_default_str();
    oval_cmd->add_option("--json", oo.json_path, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify_cmd->parsed()) return cmd_verify(vo);
        if (construct_cmd->parsed()) return cmd_construct(co);
        if (render_cmd->parsed()) return cmd_render(ro);
        return cmd_oval(oo);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

}  // namespace klein
