#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klein/transforms.hpp"

namespace klein {

// Seeded property-based verification of the model: axiom, theorem, metric
// plane, and abstract oval suites, plus deliberately sabotaged variants that
// prove the suites can fail.

struct TrialConfig {
    std::uint64_t seed = 0;
    long trials = 0;
    // Empty means every registered check of the suite; otherwise a subset of
    // the suite's check names.
    std::vector<std::string> checks;
    // Bounds the expression depth of generated coordinates (0 keeps every
    // coordinate rational).
    int max_expr_depth = 2;
};

struct CheckResult {
    std::string name;
    std::string mode;  // "exact" or "sampled"
    long trials_run = 0;
    long failures = 0;
    // Configurations discarded while searching for one meeting the check's
    // hypotheses (for example hexagons without interior diagonal points).
    long rejections = 0;
    // Serialized input scenes of failing trials, at most five, lowest trial
    // indices first.  Each entry is a JSON document string.
    std::vector<std::string> witnesses;
};

struct Report {
    bool overall = true;
    std::vector<CheckResult> checks;
};

// Each kind replaces exactly one internal operation with a deliberately wrong
// variant; the suites must catch all of them.
enum class Sabotage {
    none,
    euclidean_mirror,         // reflections act as Euclidean chord mirrors
    skewed_halfturn,          // half-turns act as Euclidean point mirrors
    dropped_bowtie_labeling,  // cross-join selection ignores the crossing test
};

const char* sabotage_name(Sabotage kind);
std::optional<Sabotage> sabotage_from_name(std::string_view name);

Report run_axiom_suite(const TrialConfig& cfg, Sabotage sabotage = Sabotage::none);
Report run_theorem_suite(const TrialConfig& cfg, Sabotage sabotage = Sabotage::none);
Report run_metric_plane_suite(const TrialConfig& cfg, Sabotage sabotage = Sabotage::none);
Report sample_hyperbolic_oval(const TrialConfig& cfg, Sabotage sabotage = Sabotage::none);

// Check names of each suite, in report order.
std::vector<std::string> suite_check_names(std::string_view suite);

std::string report_json(const Report& report);

// Motion of word length at most two taking the flag (p, l) to (q, m): a
// half-turn about the midpoint aligns the points, then a bisector reflection
// aligns the lines.
Motion flag_transport(const FinitePoint& p, const Line& l, const FinitePoint& q, const Line& m);

}  // namespace klein
