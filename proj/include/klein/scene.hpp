#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "klein/transforms.hpp"

namespace klein {

// JSON forms for geometric objects.  Coordinates travel as exact expression
// strings; when enabled, an "approx" sidecar adds 20-digit decimals that are
// display-only and never read back.

nlohmann::json point_json(const FinitePoint& p, bool with_approx = false);
nlohmann::json rimpoint_json(const Rimpoint& a, bool with_approx = false);
nlohmann::json line_json(const Line& l, bool with_approx = false);
nlohmann::json motion_json(const Motion& g, bool with_approx = false);

FinitePoint point_from_json(const nlohmann::json& j);
Rimpoint rimpoint_from_json(const nlohmann::json& j);
Line line_from_json(const nlohmann::json& j);
Motion motion_from_json(const nlohmann::json& j);

// A bag of named objects, the input and output format of the command line
// surface.  The style object is an opaque pass-through of rendering hints
// keyed by object name.
struct Scene {
    std::map<std::string, FinitePoint> points;
    std::map<std::string, Rimpoint> rimpoints;
    std::map<std::string, Line> lines;
    std::map<std::string, Motion> motions;
    nlohmann::json style = nlohmann::json::object();
};

Scene scene_from_json(const nlohmann::json& j);
nlohmann::json scene_to_json(const Scene& s, bool with_approx = false);

}  // namespace klein
