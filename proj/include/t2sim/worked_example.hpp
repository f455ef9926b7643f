#pragma once

#include <array>
#include <vector>

#include "t2sim/domain_grid.hpp"
#include "t2sim/fuzzy_sets.hpp"

namespace t2sim::worked_example {

/// Bundled reference computation: two samplings of the same underlying set at
/// different zLevel resolutions (four levels vs three), given as vertical
/// slices over x = 1..4. Their zSlices Jaccard similarity has known per-level
/// and overall values; `reproduce-appendix` and the acceptance suite check
/// against them.

struct LevelRow {
    double z;
    std::array<double, 4> lower;
    std::array<double, 4> upper;
};

[[nodiscard]] inline DomainGrid grid() { return DomainGrid(1.0, 4.0, 4); }

namespace detail {

inline GT2Set build(const std::vector<LevelRow>& rows) {
    std::vector<VerticalSlice> columns(4);
    for (std::size_t j = 0; j < 4; ++j) {
        columns[j].x = static_cast<double>(j + 1);
        for (const LevelRow& row : rows)
            columns[j].entries.push_back({row.z, row.lower[j], row.upper[j]});
    }
    return from_vertical_slices(columns);
}

}  // namespace detail

/// Four-level sampling (z = 0.25, 0.5, 0.75, 1).
[[nodiscard]] inline GT2Set set_b() {
    return detail::build({
        {0.25, {0.0, 0.0, 0.4, 0.8}, {0.25, 0.5, 0.75, 1.0}},
        {0.5, {0.0, 0.119, 0.476, 0.833}, {0.176, 0.439, 0.703, 0.967}},
        {0.75, {0.0, 0.217, 0.542, 0.867}, {0.093, 0.373, 0.653, 0.933}},
        {1.0, {0.0, 0.3, 0.6, 0.9}, {0.0, 0.3, 0.6, 0.9}},
    });
}

/// Three-level sampling (z = 0.33, 0.66, 1) of the same set.
[[nodiscard]] inline GT2Set set_c() {
    return detail::build({
        {0.33, {0.0, 0.0, 0.4, 0.8}, {0.25, 0.5, 0.75, 1.0}},
        {0.66, {0.0, 0.17, 0.51, 0.85}, {0.136, 0.407, 0.679, 0.95}},
        {1.0, {0.0, 0.3, 0.6, 0.9}, {0.0, 0.3, 0.6, 0.9}},
    });
}

struct ExpectedLevel {
    double z;
    double jaccard;
};

/// Published per-level Jaccard values over the zLevel union, 3-decimal.
[[nodiscard]] inline std::vector<ExpectedLevel> expected_levels() {
    return {{0.25, 1.0}, {0.33, 0.887}, {0.5, 0.944}, {0.66, 0.943}, {0.75, 0.889}, {1.0, 1.0}};
}

/// Published overall similarity and weight denominator, 3-decimal.
inline constexpr double expected_overall = 0.947;
inline constexpr double expected_weight_sum = 3.49;

/// The published values are rounded to three decimals, so reproduction is
/// checked to half a unit in the last place plus rounding slack.
inline constexpr double tolerance = 1e-3;

}  // namespace t2sim::worked_example
