#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <sstream>
#include <string>

#include <json.hpp>

#include "goodset/check.hpp"
#include "goodset/curve/curve_ring.hpp"
#include "goodset/good_set.hpp"

namespace goodset::io {

using json = nlohmann::json;

/// Malformed input content (as opposed to a mathematical validation failure).
class format_error : public error {
public:
    using error::error;
};

/// Unreadable path or similar environment problem.
class input_error : public error {
public:
    using error::error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline json parse(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error(what + ": " + e.what());
    }
}

inline json to_json(const Point& p) { return json(p.coords()); }

inline Point point_from_json(const json& j) {
    if (!j.is_array()) throw format_error("point must be an array of integers");
    std::vector<Coord> c;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw format_error("point must be an array of integers");
        c.push_back(x.get<Coord>());
    }
    if (c.empty()) throw format_error("point must not be empty");
    return Point(std::move(c));
}

inline json to_json(std::span<const Point> pts) {
    std::vector<Point> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end());
    json a = json::array();
    for (const auto& p : sorted) a.push_back(to_json(p));
    return a;
}

inline json to_json(const GoodSet& e) {
    return json{{"r", e.dim()},
                {"labels", e.labels()},
                {"min", to_json(e.min())},
                {"conductor", to_json(e.conductor())},
                {"points", to_json(e.small())}};
}

/// {"r": 2, "labels": [1,2], "points": [[0,0],[1,1]], "min": ..., "conductor": ...};
/// labels, min and conductor are optional, the header fields are cross-checked.
inline GoodSet good_set_from_json(const json& j, bool normalize = false) {
    if (!j.is_object() || !j.contains("points")) throw format_error("good set needs a \"points\" array");
    const json& pts = j.at("points");
    if (!pts.is_array()) throw format_error("\"points\" must be an array");
    std::vector<Point> points;
    for (const auto& p : pts) points.push_back(point_from_json(p));
    std::size_t r = 0;
    if (j.contains("r")) {
        if (!j["r"].is_number_unsigned() || j["r"].get<std::size_t>() == 0) throw format_error("\"r\" must be positive");
        r = j["r"].get<std::size_t>();
    } else if (!points.empty()) {
        r = points.front().size();
    } else {
        throw ValidationError(ValidationError::Kind::empty_input, "EmptyInput: no points given");
    }
    ValidateOptions opts;
    opts.normalize_conductor = normalize;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw format_error("\"labels\" must be an array");
        Labels l;
        for (const auto& x : j["labels"]) {
            if (!x.is_number_integer()) throw format_error("labels must be integers");
            l.push_back(x.get<int>());
        }
        opts.labels = l;
    }
    GoodSet e = validate_good_set(r, std::move(points), opts);
    using K = ValidationError::Kind;
    if (j.contains("min") && point_from_json(j["min"]) != e.min())
        throw ValidationError(K::inconsistent_header, "InconsistentHeader: min is " + to_string(e.min()));
    if (j.contains("conductor") && point_from_json(j["conductor"]) != e.conductor())
        throw ValidationError(K::inconsistent_header, "InconsistentHeader: conductor is " + to_string(e.conductor()));
    return e;
}

inline json to_json(const CheckResult& c) {
    json w = json::array();
    for (const auto& x : c.witnesses) w.push_back(json{{"points", to_json(x.points)}, {"note", x.note}});
    json out{{"name", c.name}, {"statement", c.statement}, {"passed", c.passed}, {"witnesses", w}};
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

inline bool is_curve_document(const json& j) { return j.is_object() && j.contains("branches"); }

inline std::string string_field(const json& j, const char* what) {
    if (!j.is_string()) throw format_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

inline curve::IdealSpec ideal_from_json(const std::string& name, const json& j) {
    curve::IdealSpec spec{name, {}, std::nullopt};
    const json* gens = &j;
    if (j.is_object()) {
        if (!j.contains("generators")) throw format_error("ideal '" + name + "' needs \"generators\"");
        gens = &j.at("generators");
        if (j.contains("denominator"))
            spec.denominator = curve::Expression::parse(string_field(j["denominator"], "denominator"));
    }
    if (!gens->is_array()) throw format_error("ideal '" + name + "' generators must be an array");
    for (const auto& g : *gens) spec.generators.push_back(curve::Expression::parse(string_field(g, "generator")));
    return spec;
}

/// {"variables":["x","y"],"truncation":16,"branches":[{"x":"t","y":"0"},...],"ideals":{"m":["x","y"]}}
inline curve::CurveRing curve_from_json(const json& j) {
    if (!is_curve_document(j)) throw format_error("curve file needs \"branches\"");
    if (!j.contains("variables") || !j["variables"].is_array()) throw format_error("curve file needs \"variables\"");
    std::vector<std::string> vars;
    for (const auto& v : j["variables"]) vars.push_back(string_field(v, "variable"));
    std::size_t t = 16;
    if (j.contains("truncation")) {
        if (!j["truncation"].is_number_unsigned()) throw format_error("\"truncation\" must be a positive integer");
        t = j["truncation"].get<std::size_t>();
    }
    std::vector<std::map<std::string, std::string>> branches;
    if (!j["branches"].is_array()) throw format_error("\"branches\" must be an array");
    for (const auto& b : j["branches"]) {
        if (!b.is_object()) throw format_error("each branch maps generators to series");
        std::map<std::string, std::string> m;
        for (const auto& [k, v] : b.items()) m[k] = string_field(v, "series");
        branches.push_back(std::move(m));
    }
    std::map<std::string, curve::IdealSpec> ideals;
    if (j.contains("ideals")) {
        if (!j["ideals"].is_object()) throw format_error("\"ideals\" must be an object");
        for (const auto& [k, v] : j["ideals"].items()) ideals.emplace(k, ideal_from_json(k, v));
    }
    std::optional<Labels> labels;
    if (j.contains("labels")) labels = j["labels"].get<Labels>();
    return curve::CurveRing(std::move(vars), t, branches, std::move(ideals), labels);
}

}  // namespace goodset::io
