#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "t2sim/domain_grid.hpp"
#include "t2sim/fuzzy_sets.hpp"
#include "t2sim/interval_measures.hpp"
#include "t2sim/tnorm.hpp"

namespace t2sim {

/// Which interval measure to apply, plus the t-norm for the one measure that
/// takes one.
struct MeasureId {
    enum class Kind { zeng_li, jaccard, gorzalczany, bustince };

    Kind kind = Kind::jaccard;
    TNorm tnorm = TNorm::minimum();

    [[nodiscard]] bool interval_valued() const noexcept {
        return kind == Kind::gorzalczany || kind == Kind::bustince;
    }
};

[[nodiscard]] inline std::string_view to_string(MeasureId::Kind kind) noexcept {
    switch (kind) {
        case MeasureId::Kind::zeng_li: return "zeng-li";
        case MeasureId::Kind::jaccard: return "jaccard";
        case MeasureId::Kind::gorzalczany: return "gorzalczany";
        case MeasureId::Kind::bustince: return "bustince";
    }
    return "";  // unreachable
}

[[nodiscard]] inline std::optional<MeasureId::Kind> parse_measure_kind(
    std::string_view name) noexcept {
    if (name == "zeng-li") return MeasureId::Kind::zeng_li;
    if (name == "jaccard") return MeasureId::Kind::jaccard;
    if (name == "gorzalczany") return MeasureId::Kind::gorzalczany;
    if (name == "bustince") return MeasureId::Kind::bustince;
    return std::nullopt;
}

/// The chosen measure on two interval type-2 sets.
[[nodiscard]] inline SimilarityValue sim_it2(const IT2Set& a, const IT2Set& b,
                                             const MeasureId& measure, const DomainGrid& grid) {
    switch (measure.kind) {
        case MeasureId::Kind::zeng_li: return SimilarityValue::scalar(sim_zeng_li(a, b, grid));
        case MeasureId::Kind::jaccard: return SimilarityValue::scalar(sim_jaccard(a, b, grid));
        case MeasureId::Kind::gorzalczany: return sim_gorzalczany(a, b, grid);
        case MeasureId::Kind::bustince: return sim_bustince(a, b, grid, measure.tnorm);
    }
    return SimilarityValue::scalar(0.0);  // unreachable
}

/// Sorted union of both sets' native zLevels, duplicates removed.
[[nodiscard]] inline std::vector<double> zlevel_union(const GT2Set& a, const GT2Set& b) {
    std::vector<double> za = a.zlevels();
    std::vector<double> zb = b.zlevels();
    std::vector<double> merged;
    merged.reserve(za.size() + zb.size());
    std::set_union(za.begin(), za.end(), zb.begin(), zb.end(), std::back_inserter(merged));
    return merged;
}

/// Similarity of two general type-2 sets: the interval measure applied
/// slice-by-slice over the zLevel union (each set answering a level with its
/// nearest native slice at or above it), aggregated as a zLevel-weighted
/// mean, endpoint-wise for interval measures. A level shared by neither
/// list's native slices still contributes its weight.
[[nodiscard]] inline SimilarityValue sim_zslices(const GT2Set& a, const GT2Set& b,
                                                 const MeasureId& measure, const DomainGrid& grid) {
    std::vector<double> levels = zlevel_union(a, b);
    // A single shared level must reproduce the interval measure bit for bit;
    // (z*s)/z is not exact for z != 1, so skip the weighting entirely.
    if (levels.size() == 1) return sim_it2(a.fou_at(levels[0]), b.fou_at(levels[0]), measure, grid);
    double num_lo = 0.0;
    double num_hi = 0.0;
    double den = 0.0;
    for (double z : levels) {
        SimilarityValue s = sim_it2(a.fou_at(z), b.fou_at(z), measure, grid);
        num_lo += z * s.lower();
        num_hi += z * s.upper();
        den += z;
    }
    double lo = std::clamp(num_lo / den, 0.0, 1.0);
    double hi = std::clamp(num_hi / den, lo, 1.0);
    if (measure.interval_valued()) return SimilarityValue::interval(lo, hi);
    return SimilarityValue::scalar(lo);
}

}  // namespace t2sim
