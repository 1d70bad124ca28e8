#include "klein/scene.hpp"

#include <utility>

namespace klein {

namespace {

using nlohmann::json;

constexpr int kApproxDigits = 20;

json coord_pair(const CReal& x, const CReal& y, const char* kind, bool with_approx) {
    json j;
    j["kind"] = kind;
    j["x"] = x.to_expr();
    j["y"] = y.to_expr();
    if (with_approx) j["approx"] = {{"x", x.approx(kApproxDigits)}, {"y", y.approx(kApproxDigits)}};
    return j;
}

const json& field(const json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end())
        throw error(errc::construction, std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

CReal coord(const json& j, const char* key, const char* what) {
    const json& v = field(j, key, what);
    if (!v.is_string())
        throw error(errc::construction, std::string(what) + " coordinate \"" + key +
                                            "\" must be an expression string");
    return CReal::parse(v.get<std::string>());
}

void expect_kind(const json& j, const char* kind, const char* what) {
    auto it = j.find("kind");
    if (it != j.end() && (!it->is_string() || it->get<std::string>() != kind))
        throw error(errc::construction, std::string(what) + " has kind " + it->dump() +
                                            ", expected \"" + kind + "\"");
}

}  // namespace

json point_json(const FinitePoint& p, bool with_approx) {
    return coord_pair(p.x(), p.y(), "point", with_approx);
}

json rimpoint_json(const Rimpoint& a, bool with_approx) {
    return coord_pair(a.x(), a.y(), "rimpoint", with_approx);
}

json line_json(const Line& l, bool with_approx) {
    json j;
    j["kind"] = "line";
    j["ends"] = {rimpoint_json(l.end1(), with_approx), rimpoint_json(l.end2(), with_approx)};
    return j;
}

json motion_json(const Motion& g, bool with_approx) {
    json word = json::array();
    for (const Generator& gen : g.word()) {
        if (const auto* h = std::get_if<HalfTurnGen>(&gen))
            word.push_back({{"kind", "halfturn"}, {"p", point_json(h->center, with_approx)}});
        else
            word.push_back({{"kind", "reflection"},
                            {"line", line_json(std::get<ReflectGen>(gen).axis, with_approx)}});
    }
    return word;
}

FinitePoint point_from_json(const json& j) {
    expect_kind(j, "point", "point");
    return FinitePoint(coord(j, "x", "point"), coord(j, "y", "point"));
}

Rimpoint rimpoint_from_json(const json& j) {
    expect_kind(j, "rimpoint", "rimpoint");
    return Rimpoint(coord(j, "x", "rimpoint"), coord(j, "y", "rimpoint"));
}

Line line_from_json(const json& j) {
    expect_kind(j, "line", "line");
    const json& ends = field(j, "ends", "line");
    if (!ends.is_array() || ends.size() != 2)
        throw error(errc::construction, "line \"ends\" must be an array of two rimpoints");
    return Line(rimpoint_from_json(ends[0]), rimpoint_from_json(ends[1]));
}

Motion motion_from_json(const json& j) {
    if (!j.is_array()) throw error(errc::construction, "a motion must be a generator array");
    std::vector<Generator> word;
    for (const json& gen : j) {
        const json& kind = field(gen, "kind", "generator");
        if (kind == "halfturn")
            word.push_back(HalfTurnGen{point_from_json(field(gen, "p", "halfturn generator"))});
        else if (kind == "reflection")
            word.push_back(ReflectGen{line_from_json(field(gen, "line", "reflection generator"))});
        else
            throw error(errc::construction, "unknown generator kind " + kind.dump());
    }
    return Motion(std::move(word));
}

Scene scene_from_json(const json& j) {
    if (!j.is_object()) throw error(errc::construction, "a scene must be a JSON object");
    Scene s;
    const json empty = json::object();
    auto group = [&](const char* key) -> const json& {
        auto it = j.find(key);
        if (it == j.end()) return empty;
        if (!it->is_object())
            throw error(errc::construction, std::string("scene \"") + key + "\" must be an object");
        return *it;
    };
    for (auto& [name, v] : group("points").items()) s.points.insert({name, point_from_json(v)});
    for (auto& [name, v] : group("rimpoints").items())
        s.rimpoints.insert({name, rimpoint_from_json(v)});
    for (auto& [name, v] : group("lines").items()) s.lines.insert({name, line_from_json(v)});
    for (auto& [name, v] : group("motions").items()) s.motions.insert({name, motion_from_json(v)});
    if (auto it = j.find("style"); it != j.end()) s.style = *it;
    return s;
}

json scene_to_json(const Scene& s, bool with_approx) {
    json j = json::object();
    if (!s.points.empty()) {
        json g;
        for (const auto& [name, p] : s.points) g[name] = point_json(p, with_approx);
        j["points"] = g;
    }
    if (!s.rimpoints.empty()) {
        json g;
        for (const auto& [name, a] : s.rimpoints) g[name] = rimpoint_json(a, with_approx);
        j["rimpoints"] = g;
    }
    if (!s.lines.empty()) {
        json g;
        for (const auto& [name, l] : s.lines) g[name] = line_json(l, with_approx);
        j["lines"] = g;
    }
    if (!s.motions.empty()) {
        json g;
        for (const auto& [name, m] : s.motions) g[name] = motion_json(m, with_approx);
        j["motions"] = g;
    }
    if (!s.style.empty()) j["style"] = s.style;
    return j;
}

}  // namespace klein
