#pragma once

#include <fstream>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "t2sim/fuzzy_sets.hpp"
#include "t2sim/membership_function.hpp"

namespace t2sim::cli {

/// Rejected set document. The message names the file and the offending
/// field's path.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One parsed set-definition file. Every kind is held as a GT2Set (t1 and
/// it2 documents promote to a single slice at z = 1), so the zSlices measure
/// applies uniformly.
struct SetDocument {
    std::string name;
    std::string kind;
    double domain_min;
    double domain_max;
    GT2Set set;
};

namespace doc_detail {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw DocumentError(path + ": " + what);
}

inline void require_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed) {
    for (const auto& item : obj.items())
        if (!allowed.contains(item.key())) fail(path, "unknown field '" + item.key() + "'");
}

inline const json& member(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

inline double number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

inline std::string string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

inline std::vector<double> number_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of numbers");
    std::vector<double> values;
    values.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        values.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    return values;
}

/// Runs a library constructor and converts its invariant failure into a
/// DocumentError carrying the field path.
template <typename Fn>
auto checked(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const DocumentError&) {
        throw;
    } catch (const std::exception& e) {
        fail(path, e.what());
    }
}

inline MembershipFunction parse_shape(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a shape object");
    std::string shape = string(member(j, path, "shape"), path + ".shape");
    if (shape == "trapezoid") {
        require_keys(j, path, {"shape", "a", "b", "c", "d", "height"});
        Trapezoid t{number(member(j, path, "a"), path + ".a"),
                    number(member(j, path, "b"), path + ".b"),
                    number(member(j, path, "c"), path + ".c"),
                    number(member(j, path, "d"), path + ".d"), 1.0};
        if (j.contains("height")) t.height = number(j["height"], path + ".height");
        return checked(path, [&] { return MembershipFunction(t); });
    }
    if (shape == "triangle") {
        require_keys(j, path, {"shape", "a", "b", "c", "height"});
        Triangle t{number(member(j, path, "a"), path + ".a"),
                   number(member(j, path, "b"), path + ".b"),
                   number(member(j, path, "c"), path + ".c"), 1.0};
        if (j.contains("height")) t.height = number(j["height"], path + ".height");
        return checked(path, [&] { return MembershipFunction(t); });
    }
    if (shape == "piecewise-linear") {
        require_keys(j, path, {"shape", "points"});
        const json& points = member(j, path, "points");
        if (!points.is_array()) fail(path + ".points", "expected an array of [x, grade] pairs");
        PiecewiseLinear p;
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::string at = path + ".points[" + std::to_string(i) + "]";
            const json& pt = points[i];
            if (!pt.is_array() || pt.size() != 2) fail(at, "expected an [x, grade] pair");
            p.vertices.push_back({number(pt[0], at + "[0]"), number(pt[1], at + "[1]")});
        }
        return checked(path, [&] { return MembershipFunction(std::move(p)); });
    }
    if (shape == "sampled") {
        require_keys(j, path, {"shape", "x_min", "x_max", "grades"});
        double x_min = number(member(j, path, "x_min"), path + ".x_min");
        double x_max = number(member(j, path, "x_max"), path + ".x_max");
        std::vector<double> grades = number_array(member(j, path, "grades"), path + ".grades");
        return checked(path, [&] {
            return MembershipFunction(
                Sampled{DomainGrid(x_min, x_max, grades.size()), std::move(grades)});
        });
    }
    fail(path + ".shape", "unknown shape '" + shape + "'");
}

inline std::pair<double, double> parse_domain(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object with 'min' and 'max'");
    require_keys(j, path, {"min", "max"});
    double lo = number(member(j, path, "min"), path + ".min");
    double hi = number(member(j, path, "max"), path + ".max");
    if (!(lo < hi)) fail(path, "requires min < max");
    return {lo, hi};
}

inline GT2Set parse_gt2_sampled(const json& j, const std::string& path) {
    std::vector<double> xs = number_array(member(j, path, "x"), path + ".x");
    if (xs.empty()) fail(path + ".x", "needs at least one domain point");
    const json& levels = member(j, path, "levels");
    if (!levels.is_array() || levels.empty())
        fail(path + ".levels", "expected a non-empty array of level objects");
    std::vector<VerticalSlice> columns(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) columns[k].x = xs[k];
    for (std::size_t i = 0; i < levels.size(); ++i) {
        std::string at = path + ".levels[" + std::to_string(i) + "]";
        const json& level = levels[i];
        if (!level.is_object()) fail(at, "expected a level object");
        require_keys(level, at, {"z", "lower", "upper"});
        double z = number(member(level, at, "z"), at + ".z");
        std::vector<double> lower = number_array(member(level, at, "lower"), at + ".lower");
        std::vector<double> upper = number_array(member(level, at, "upper"), at + ".upper");
        if (lower.size() != xs.size()) fail(at + ".lower", "needs one grade per domain point");
        if (upper.size() != xs.size()) fail(at + ".upper", "needs one grade per domain point");
        for (std::size_t k = 0; k < xs.size(); ++k)
            columns[k].entries.push_back({z, lower[k], upper[k]});
    }
    return checked(path, [&] { return from_vertical_slices(columns); });
}

inline SetDocument parse_set_document(const json& j, const std::string& origin) {
    std::string path = origin + ": $";
    if (!j.is_object()) fail(path, "expected a set document object");
    std::string name = string(member(j, path, "name"), path + ".name");
    if (name.empty()) fail(path + ".name", "must not be empty");
    std::string kind = string(member(j, path, "kind"), path + ".kind");

    if (kind == "t1") {
        require_keys(j, path, {"name", "kind", "domain", "mf"});
        auto [lo, hi] = parse_domain(member(j, path, "domain"), path + ".domain");
        MembershipFunction mf = parse_shape(member(j, path, "mf"), path + ".mf");
        return {std::move(name), std::move(kind), lo, hi, promote(T1Set(std::move(mf)))};
    }
    if (kind == "it2") {
        require_keys(j, path, {"name", "kind", "domain", "lower", "upper"});
        auto [lo, hi] = parse_domain(member(j, path, "domain"), path + ".domain");
        MembershipFunction lower = parse_shape(member(j, path, "lower"), path + ".lower");
        MembershipFunction upper = parse_shape(member(j, path, "upper"), path + ".upper");
        return {std::move(name), std::move(kind), lo, hi,
                promote(IT2Set(std::move(lower), std::move(upper)))};
    }
    if (kind == "gt2-sliced") {
        require_keys(j, path, {"name", "kind", "domain", "lower", "upper", "zlevels", "secondary"});
        auto [lo, hi] = parse_domain(member(j, path, "domain"), path + ".domain");
        MembershipFunction lower = parse_shape(member(j, path, "lower"), path + ".lower");
        MembershipFunction upper = parse_shape(member(j, path, "upper"), path + ".upper");
        std::vector<double> zlevels =
            number_array(member(j, path, "zlevels"), path + ".zlevels");
        if (j.contains("secondary")) {
            std::string secondary = string(j["secondary"], path + ".secondary");
            if (secondary != "triangular-at-center")
                fail(path + ".secondary", "unknown secondary shape '" + secondary + "'");
        }
        GT2Set set = checked(path, [&] {
            return slice_gt2(IT2Set(std::move(lower), std::move(upper)), SecondarySpec{}, zlevels);
        });
        return {std::move(name), std::move(kind), lo, hi, std::move(set)};
    }
    if (kind == "gt2-sampled") {
        require_keys(j, path, {"name", "kind", "domain", "x", "levels"});
        GT2Set set = parse_gt2_sampled(j, path);
        std::vector<double> xs = number_array(j["x"], path + ".x");
        double lo = xs.front();
        double hi = xs.back();
        if (j.contains("domain")) {
            auto [dlo, dhi] = parse_domain(j["domain"], path + ".domain");
            lo = dlo;
            hi = dhi;
        }
        if (!(lo < hi)) fail(path, "domain requires min < max");
        return {std::move(name), std::move(kind), lo, hi, std::move(set)};
    }
    fail(path + ".kind", "unknown kind '" + kind + "'");
}

}  // namespace doc_detail

[[nodiscard]] inline SetDocument parse_set_document(const nlohmann::json& j,
                                                    const std::string& origin) {
    return doc_detail::parse_set_document(j, origin);
}

[[nodiscard]] inline SetDocument load_set_document(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw DocumentError(file + ": cannot open file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DocumentError(file + ": " + e.what());
    }
    return parse_set_document(j, file);
}

}  // namespace t2sim::cli
