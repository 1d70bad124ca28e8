#include "klein/svg.hpp"

#include <map>
#include <string>

namespace klein {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

// Attribute names must stay well formed no matter what the style object
// holds, so anything outside the XML name grammar is dropped.
bool valid_attr_name(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    if (!alpha(s[0]) && s[0] != '_') return false;
    for (char c : s) {
        if (alpha(c) || (c >= '0' && c <= '9')) continue;
        if (c == '-' || c == '_' || c == '.' || c == ':') continue;
        return false;
    }
    return true;
}

using Attrs = std::map<std::string, std::string>;

void overlay_style(Attrs& attrs, const nlohmann::json& style, const std::string& name) {
    if (!style.is_object()) return;
    auto it = style.find(name);
    if (it == style.end() || !it->is_object()) return;
    for (const auto& [key, value] : it->items()) {
        if (!valid_attr_name(key)) continue;
        if (value.is_string())
            attrs[key] = value.get<std::string>();
        else if (value.is_number())
            attrs[key] = value.dump();
    }
}

void emit(std::string& out, const char* tag, Attrs attrs) {
    out += '<';
    out += tag;
    for (const auto& [key, value] : attrs) {
        out += ' ';
        out += key;
        out += "=\"";
        out += xml_escape(value);
        out += '"';
    }
    out += "/>\n";
}

std::string coord(const CReal& v) { return v.approx_fixed(32); }

}  // namespace

std::string render_svg(const Scene& scene, int size_px) {
    if (size_px <= 0) throw error(errc::precondition, "size must be positive");

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    out += std::to_string(size_px);
    out += "\" height=\"";
    out += std::to_string(size_px);
    out += "\" viewBox=\"-1.08 -1.08 2.16 2.16\">\n";
    // Flip to the usual mathematical orientation (y grows upward).
    out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\">\n";

    emit(out, "circle", Attrs{{"class", "disk"},
                              {"cx", "0"},
                              {"cy", "0"},
                              {"r", "1"},
                              {"stroke", "#333333"},
                              {"stroke-width", "0.01"}});

    for (const auto& [name, l] : scene.lines) {
        const Rimpoint e1 = l.end1();
        const Rimpoint e2 = l.end2();
        Attrs attrs{{"class", "chord"},
                    {"data-name", name},
                    {"x1", coord(e1.x())},
                    {"y1", coord(e1.y())},
                    {"x2", coord(e2.x())},
                    {"y2", coord(e2.y())},
                    {"stroke", "#444444"},
                    {"stroke-width", "0.008"}};
        overlay_style(attrs, scene.style, name);
        emit(out, "line", std::move(attrs));
    }

    for (const auto& [name, p] : scene.points) {
        Attrs attrs{{"class", "point"},
                    {"data-name", name},
                    {"cx", coord(p.x())},
                    {"cy", coord(p.y())},
                    {"r", "0.018"},
                    {"fill", "#c43333"}};
        overlay_style(attrs, scene.style, name);
        emit(out, "circle", std::move(attrs));
    }

    for (const auto& [name, a] : scene.rimpoints) {
        Attrs attrs{{"class", "rimpoint"},
                    {"data-name", name},
                    {"cx", coord(a.x())},
                    {"cy", coord(a.y())},
                    {"r", "0.018"},
                    {"fill", "#2255bb"}};
        overlay_style(attrs, scene.style, name);
        emit(out, "circle", std::move(attrs));
    }

    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace klein
