#pragma once

#include <string>

#include "klein/scene.hpp"

namespace klein {

// Renders a scene as a standalone SVG 1.1 document: the unit disk boundary,
// every line as a chord, and every point and rim point as a small disk
// marker.  Coordinates are 32-digit decimal approximations and the drawing is
// presentation only, never read back.  String and numeric entries of
// scene.style[name] are copied onto the element drawn for the object of that
// name, overriding its default attributes.  Output is deterministic: equal
// scenes and sizes produce byte-identical documents.
std::string render_svg(const Scene& scene, int size_px = 512);

}  // namespace klein
