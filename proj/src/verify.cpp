#include "klein/verify.hpp"

#include <algorithm>
#include <set>

#include "verify_internal.hpp"

namespace klein {

namespace detail_verify {

TrialRng::TrialRng(std::uint64_t seed, std::string_view check, long trial) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (char ch : check) mix(static_cast<unsigned char>(ch));
    mix(seed);
    mix(static_cast<std::uint64_t>(trial));
    state_ = h;
}

std::uint64_t TrialRng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long TrialRng::range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

// Euclidean mirror of (x, y) across the carrier line of l, radially projected
// back onto the circle: agrees with the true reflection only on diameters.
Rimpoint euclidean_mirror_rim(const Line& l, const Rimpoint& p) {
    const CReal two(2);
    CReal t = (l.a() * p.x() + l.b() * p.y() + l.c()) / (l.a() * l.a() + l.b() * l.b());
    CReal mx = p.x() - two * l.a() * t;
    CReal my = p.y() - two * l.b() * t;
    CReal n2 = mx * mx + my * my;
    if (n2.sign() == 0) return other_rimpoint(p, canonical_point_on(l));
    CReal n = sqrt(n2);
    return Rimpoint(unchecked, mx / n, my / n);
}

// Euclidean point mirror across p, radially projected back onto the circle:
// agrees with the true half-turn only at the disk center.
Rimpoint skewed_halfturn_rim(const FinitePoint& p, const Rimpoint& x) {
    const CReal two(2);
    CReal mx = two * p.x() - x.x();
    CReal my = two * p.y() - x.y();
    CReal n2 = mx * mx + my * my;
    if (n2.sign() == 0) return other_rimpoint(x, p);
    CReal n = sqrt(n2);
    return Rimpoint(unchecked, mx / n, my / n);
}

}  // namespace

Rimpoint Ops::halfturn_rim(const FinitePoint& p, const Rimpoint& x) const {
    if (kind == Sabotage::skewed_halfturn) return skewed_halfturn_rim(p, x);
    return other_rimpoint(x, p);
}

Rimpoint Ops::reflect_rim(const Line& l, const Rimpoint& x) const {
    if (kind == Sabotage::euclidean_mirror) return euclidean_mirror_rim(l, x);
    return motion_apply(reflection(l), x);
}

std::pair<Line, Line> Ops::cross_joins(const Line& l, const Line& m) const {
    Line straight1(l.end1(), m.end1());
    Line straight2(l.end2(), m.end2());
    if (kind == Sabotage::dropped_bowtie_labeling) return {straight1, straight2};
    if (finite_meet(straight1, straight2)) return {straight1, straight2};
    Line crossed1(l.end1(), m.end2());
    Line crossed2(l.end2(), m.end1());
    if (finite_meet(crossed1, crossed2)) return {crossed1, crossed2};
    throw error(errc::precondition, "cross_joins requires a pairing that meets finitely");
}

Rat rand_unit_rat(TrialRng& rng) {
    long d = rng.range(2, 16);
    long n = rng.range(-(d - 1), d - 1);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

CReal rand_unit_scalar(TrialRng& rng, int depth) {
    if (depth <= 0 || rng.range(0, 3) != 0) {
        long d = rng.range(2, 16);
        long n = rng.range(1, d - 1);
        return CReal(Rat(n, d));
    }
    switch (rng.range(0, 2)) {
        case 0:
            return sqrt(rand_unit_scalar(rng, depth - 1));
        case 1:
            return (rand_unit_scalar(rng, depth - 1) + rand_unit_scalar(rng, depth - 1)) /
                   CReal(2);
        default:
            return rand_unit_scalar(rng, depth - 1) * rand_unit_scalar(rng, depth - 1);
    }
}

namespace {

std::optional<Rat> rand_rim_parameter(TrialRng& rng) {
    if (rng.one_in(16)) return std::nullopt;  // the parameter at infinity
    long d = rng.range(1, 8);
    long n = rng.range(-12, 12);
    Rat q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace

Rimpoint rand_rim(Ctx& c, const std::string& name) {
    Rimpoint r = rimpoint_from_parameter(rand_rim_parameter(c.rng));
    c.put(name, r);
    return r;
}

Rimpoint rand_rim_avoiding(Ctx& c, const std::string& name,
                           std::initializer_list<const Rimpoint*> avoid) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rimpoint r = rimpoint_from_parameter(rand_rim_parameter(c.rng));
        bool clash = false;
        for (const Rimpoint* a : avoid)
            if (rims_equal(r, *a)) clash = true;
        if (clash) continue;
        c.put(name, r);
        return r;
    }
    throw error(errc::precondition, "rimpoint draw kept colliding with the avoid set");
}

FinitePoint rand_point(Ctx& c, const std::string& name) {
    Rimpoint dir = rimpoint_from_parameter(rand_rim_parameter(c.rng));
    CReal r = rand_unit_scalar(c.rng, c.depth);
    FinitePoint p(r * dir.x(), r * dir.y());
    c.put(name, p);
    return p;
}

Line rand_line(Ctx& c, const std::string& name) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rimpoint e1 = rimpoint_from_parameter(rand_rim_parameter(c.rng));
        Rimpoint e2 = rimpoint_from_parameter(rand_rim_parameter(c.rng));
        if (rims_equal(e1, e2)) continue;
        Line l(e1, e2);
        c.put(name, l);
        return l;
    }
    throw error(errc::precondition, "line draw kept producing equal ends");
}

FinitePoint rand_point_on(Ctx& c, const std::string& name, const Line& l) {
    FinitePoint p = point_on_at(l, rand_unit_rat(c.rng));
    c.put(name, p);
    return p;
}

std::optional<FinitePoint> finite_meet(const Line& l, const Line& m) {
    Intersection x = meet(l, m);
    if (const auto* p = std::get_if<FinitePoint>(&x)) return *p;
    return std::nullopt;
}

bool collinear(const FinitePoint& a, const FinitePoint& b, const FinitePoint& c) {
    if (points_equal(a, b) || points_equal(a, c) || points_equal(b, c)) return true;
    return incident(line_through(a, b), c);
}

bool have_common_perpendicular(const Line& a, const Line& b, const Line& c) {
    if (classify_pair(a, b) != PairClass::Ultraparallel) return false;
    if (classify_pair(a, c) != PairClass::Ultraparallel) return false;
    if (classify_pair(b, c) != PairClass::Ultraparallel) return false;
    return is_perpendicular(common_perpendicular(a, b), c);
}

}  // namespace detail_verify

namespace {

using detail_verify::CheckDef;
using detail_verify::Ctx;
using detail_verify::Ops;
using detail_verify::TrialRng;

std::vector<CheckDef> checks_for(std::string_view suite) {
    if (suite == "axioms") return detail_verify::axiom_checks();
    if (suite == "theorems") return detail_verify::theorem_checks();
    if (suite == "metric") return detail_verify::metric_checks();
    if (suite == "oval-sample") return detail_verify::oval_sample_checks();
    throw error(errc::precondition, "unknown suite name");
}

Report run_suite(std::string_view suite, const TrialConfig& cfg, Sabotage sabotage) {
    std::vector<CheckDef> defs = checks_for(suite);
    if (!cfg.checks.empty()) {
        std::set<std::string> wanted(cfg.checks.begin(), cfg.checks.end());
        for (const CheckDef& d : defs) wanted.erase(d.name);
        if (!wanted.empty())
            throw error(errc::precondition, "unknown check name \"" + *wanted.begin() + "\"");
        auto unlisted = [&](const CheckDef& d) {
            return std::find(cfg.checks.begin(), cfg.checks.end(), d.name) == cfg.checks.end();
        };
        defs.erase(std::remove_if(defs.begin(), defs.end(), unlisted), defs.end());
    }

    Ops ops{sabotage};
    Report report;
    for (const CheckDef& def : defs) {
        CheckResult result;
        result.name = def.name;
        result.mode = def.mode;
        for (long trial = 0; trial < cfg.trials; ++trial) {
            Ctx ctx{TrialRng(cfg.seed, def.name, trial), ops, cfg.max_expr_depth};
            bool pass = false;
            std::string failure_note;
            try {
                pass = def.run(ctx);
            } catch (const error& e) {
                pass = false;
                failure_note = e.what();
            }
            result.trials_run += 1;
            result.rejections += ctx.rejections;
            if (!pass) {
                result.failures += 1;
                if (result.witnesses.size() < 5) {
                    nlohmann::json w;
                    w["trial"] = trial;
                    w["scene"] = scene_to_json(ctx.scene);
                    if (!failure_note.empty()) w["error"] = failure_note;
                    result.witnesses.push_back(w.dump());
                }
            }
        }
        if (result.failures > 0) report.overall = false;
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace

const char* sabotage_name(Sabotage kind) {
    switch (kind) {
        case Sabotage::euclidean_mirror:
            return "euclidean-mirror";
        case Sabotage::skewed_halfturn:
            return "skewed-halfturn";
        case Sabotage::dropped_bowtie_labeling:
            return "dropped-bowtie-labeling";
        default:
            return "none";
    }
}

std::optional<Sabotage> sabotage_from_name(std::string_view name) {
    if (name == "none") return Sabotage::none;
    if (name == "euclidean-mirror") return Sabotage::euclidean_mirror;
    if (name == "skewed-halfturn") return Sabotage::skewed_halfturn;
    if (name == "dropped-bowtie-labeling") return Sabotage::dropped_bowtie_labeling;
    return std::nullopt;
}

Report run_axiom_suite(const TrialConfig& cfg, Sabotage sabotage) {
    return run_suite("axioms", cfg, sabotage);
}

Report run_theorem_suite(const TrialConfig& cfg, Sabotage sabotage) {
    return run_suite("theorems", cfg, sabotage);
}

Report run_metric_plane_suite(const TrialConfig& cfg, Sabotage sabotage) {
    return run_suite("metric", cfg, sabotage);
}

Report sample_hyperbolic_oval(const TrialConfig& cfg, Sabotage sabotage) {
    return run_suite("oval-sample", cfg, sabotage);
}

std::vector<std::string> suite_check_names(std::string_view suite) {
    std::vector<std::string> names;
    for (const CheckDef& d : checks_for(suite)) names.push_back(d.name);
    return names;
}

std::string report_json(const Report& report) {
    nlohmann::json j;
    j["overall"] = report.overall;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["mode"] = c.mode;
        e["trials"] = c.trials_run;
        e["failures"] = c.failures;
        e["rejections"] = c.rejections;
        nlohmann::json witnesses = nlohmann::json::array();
        for (const std::string& w : c.witnesses) witnesses.push_back(nlohmann::json::parse(w));
        e["witnesses"] = witnesses;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

Motion flag_transport(const FinitePoint& p, const Line& l, const FinitePoint& q, const Line& m) {
    if (!incident(l, p) || !incident(m, q))
        throw error(errc::precondition, "flag_transport requires incident point-line flags");
    Motion word;
    Line carried = l;
    if (!points_equal(p, q)) {
        word = half_turn(midpoint(p, q));
        carried = motion_apply(word, l);
    }
    if (!lines_equal(carried, m)) {
        Line n = [&] {
            try {
                return bisector(carried, m, EndPairing::Straight);
            } catch (const error&) {
                return bisector(carried, m, EndPairing::Crossed);
            }
        }();
        word = motion_compose(word, reflection(n));
    }
    return word;
}

}  // namespace klein
