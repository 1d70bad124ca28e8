#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klein/scene.hpp"
#include "klein/verify.hpp"

namespace klein::detail_verify {

// Splittable stream keyed by (seed, check name, trial index): every trial owns
// an independent sequence, so results do not depend on execution order.
class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::string_view check, long trial);

    std::uint64_t next();
    // Uniform integer in [lo, hi], inclusive.
    long range(long lo, long hi);
    bool coin() { return next() & 1; }
    // True once in n draws on average.
    bool one_in(long n) { return range(1, n) == 1; }

  private:
    std::uint64_t state_;
};

// Operation table the checks route their primitive steps through.  The honest
// table delegates to the motion layer; each sabotage kind replaces exactly one
// entry with a deliberately wrong variant.
struct Ops {
    Sabotage kind = Sabotage::none;

    // Image of the rimpoint x under the half-turn about p.
    Rimpoint halfturn_rim(const FinitePoint& p, const Rimpoint& x) const;
    // Image of the rimpoint x under the reflection about l.
    Rimpoint reflect_rim(const Line& l, const Rimpoint& x) const;
    // The two cross-joins of ends of l to ends of m that meet each other in a
    // finite point (the crossing pairing of an ultraparallel pair).
    std::pair<Line, Line> cross_joins(const Line& l, const Line& m) const;
};

// Per-trial context: the trial's private stream, the operation table, the
// coordinate depth bound, and the scene of generated objects kept as the
// failure witness.  Rejected configurations are counted, not failed.
struct Ctx {
    TrialRng rng;
    const Ops& ops;
    int depth;
    Scene scene;
    long rejections = 0;

    void put(const std::string& name, const FinitePoint& p) {
        scene.points.insert_or_assign(name, p);
    }
    void put(const std::string& name, const Rimpoint& a) {
        scene.rimpoints.insert_or_assign(name, a);
    }
    void put(const std::string& name, const Line& l) { scene.lines.insert_or_assign(name, l); }
    void put(const std::string& name, const Motion& m) { scene.motions.insert_or_assign(name, m); }
};

// Generators.  Every drawn object satisfies its invariant exactly and is
// recorded in the witness scene under the given name.
Rat rand_unit_rat(TrialRng& rng);                       // rational in (-1, 1)
CReal rand_unit_scalar(TrialRng& rng, int depth);       // value in (0, 1)
Rimpoint rand_rim(Ctx& c, const std::string& name);
Rimpoint rand_rim_avoiding(Ctx& c, const std::string& name,
                           std::initializer_list<const Rimpoint*> avoid);
FinitePoint rand_point(Ctx& c, const std::string& name);
Line rand_line(Ctx& c, const std::string& name);
FinitePoint rand_point_on(Ctx& c, const std::string& name, const Line& l);

std::optional<FinitePoint> finite_meet(const Line& l, const Line& m);
bool collinear(const FinitePoint& a, const FinitePoint& b, const FinitePoint& c);
// Whether one line is perpendicular to all three (the lines must be pairwise
// ultraparallel for such a line to exist).
bool have_common_perpendicular(const Line& a, const Line& b, const Line& c);

// Draws that kept missing their hypotheses end the trial as a failure with
// this error; the runner records the scene built so far as the witness.
[[noreturn]] inline void give_up(const char* what) {
    throw error(errc::precondition, std::string("no admissible configuration: ") + what);
}

inline FinitePoint rand_point_avoiding(Ctx& c, const std::string& name,
                                       std::initializer_list<const FinitePoint*> avoid) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        FinitePoint p = rand_point(c, name);
        bool clash = false;
        for (const FinitePoint* q : avoid)
            if (points_equal(p, *q)) clash = true;
        if (!clash) return p;
        c.rejections += 1;
    }
    give_up("distinct point draw");
}

inline FinitePoint rand_point_on_avoiding(Ctx& c, const std::string& name, const Line& l,
                                          std::initializer_list<const FinitePoint*> avoid) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        FinitePoint p = rand_point_on(c, name, l);
        bool clash = false;
        for (const FinitePoint* q : avoid)
            if (points_equal(p, *q)) clash = true;
        if (!clash) return p;
        c.rejections += 1;
    }
    give_up("distinct point on line");
}

inline FinitePoint rand_point_off(Ctx& c, const std::string& name, const Line& l) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        FinitePoint p = rand_point(c, name);
        if (!incident(l, p)) return p;
        c.rejections += 1;
    }
    give_up("point off the line");
}

// Three pairwise distinct affine positions for points on one line.
inline void distinct_positions(Ctx& c, Rat& s1, Rat& s2, Rat& s3) {
    s1 = rand_unit_rat(c.rng);
    s2 = rand_unit_rat(c.rng);
    s3 = rand_unit_rat(c.rng);
    for (int attempt = 0; s1 == s2 || s1 == s3 || s2 == s3; ++attempt) {
        if (attempt >= 200) give_up("three distinct positions");
        c.rejections += 1;
        s1 = rand_unit_rat(c.rng);
        s2 = rand_unit_rat(c.rng);
        s3 = rand_unit_rat(c.rng);
    }
}

struct CheckDef {
    const char* name;
    const char* mode;  // "exact" or "sampled"
    bool (*run)(Ctx&);
};

std::vector<CheckDef> axiom_checks();
std::vector<CheckDef> theorem_checks();
std::vector<CheckDef> metric_checks();
std::vector<CheckDef> oval_sample_checks();

}  // namespace klein::detail_verify
