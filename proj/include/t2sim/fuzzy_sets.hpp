#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "t2sim/domain_grid.hpp"
#include "t2sim/membership_function.hpp"

namespace t2sim {

/// Ordinary (type-1) fuzzy set: a single membership function.
class T1Set {
public:
    explicit T1Set(MembershipFunction mf) : mf_(std::move(mf)) {}
    [[nodiscard]] const MembershipFunction& mf() const noexcept { return mf_; }

private:
    MembershipFunction mf_;
};

/// Interval type-2 fuzzy set, represented by the two functions bounding its
/// footprint of uncertainty. Well-formedness (lower <= upper) is relative to
/// a grid; see validate_on.
class IT2Set {
public:
    IT2Set(MembershipFunction lower, MembershipFunction upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {}

    [[nodiscard]] const MembershipFunction& lower() const noexcept { return lower_; }
    [[nodiscard]] const MembershipFunction& upper() const noexcept { return upper_; }

private:
    MembershipFunction lower_;
    MembershipFunction upper_;
};

/// Throws if the set's lower function exceeds its upper function at any grid
/// point.
inline void validate_on(const IT2Set& set, const DomainGrid& grid) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double x = grid.point(k);
        if (set.lower()(x) > set.upper()(x)) {
            std::ostringstream msg;
            msg << "IT2Set: lower exceeds upper at x = " << x;
            throw std::invalid_argument(msg.str());
        }
    }
}

/// One horizontal cut of a general type-2 set: the footprint at level z.
struct ZSlice {
    double z;
    IT2Set fou;
};

/// General type-2 fuzzy set as an ordered stack of zSlices. Slices are kept
/// at strictly increasing z in (0, 1]; z = 0 is never stored (its footprint
/// carries no information). Footprints shrink as z grows; that nesting is
/// grid-relative, see validate_on.
class GT2Set {
public:
    explicit GT2Set(std::vector<ZSlice> slices) : slices_(std::move(slices)) {
        if (slices_.empty())
            throw std::invalid_argument("GT2Set: needs at least one zSlice");
        for (std::size_t i = 0; i < slices_.size(); ++i) {
            double z = slices_[i].z;
            if (!(z > 0.0) || z > 1.0)
                throw std::invalid_argument("GT2Set: zLevels must lie in (0, 1]");
            if (i > 0 && !(slices_[i - 1].z < z))
                throw std::invalid_argument("GT2Set: zLevels must be strictly increasing");
        }
    }

    [[nodiscard]] const std::vector<ZSlice>& slices() const noexcept { return slices_; }

    [[nodiscard]] std::vector<double> zlevels() const {
        std::vector<double> zs(slices_.size());
        for (std::size_t i = 0; i < slices_.size(); ++i) zs[i] = slices_[i].z;
        return zs;
    }

    /// Footprint at level z: the slice with the smallest native zLevel >= z
    /// (a set sliced at {0.33, 0.66, 1} answers z = 0.25 with its 0.33
    /// slice). Above the highest native level the highest slice answers.
    [[nodiscard]] const IT2Set& fou_at(double z) const {
        if (!(z > 0.0))
            throw std::invalid_argument("GT2Set::fou_at: z must be positive");
        for (const ZSlice& s : slices_)
            if (s.z >= z) return s.fou;
        return slices_.back().fou;
    }

private:
    std::vector<ZSlice> slices_;
};

/// Throws if any slice's footprint is malformed on the grid or if a higher
/// slice's footprint is not contained in a lower one's.
inline void validate_on(const GT2Set& set, const DomainGrid& grid) {
    for (const ZSlice& s : set.slices()) validate_on(s.fou, grid);
    const auto& slices = set.slices();
    for (std::size_t i = 1; i < slices.size(); ++i) {
        const IT2Set& outer = slices[i - 1].fou;
        const IT2Set& inner = slices[i].fou;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            double x = grid.point(k);
            if (inner.lower()(x) < outer.lower()(x) || inner.upper()(x) > outer.upper()(x)) {
                std::ostringstream msg;
                msg << "GT2Set: slice at z = " << slices[i].z
                    << " is not nested in slice at z = " << slices[i - 1].z << " at x = " << x;
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

/// How secondary membership is shaped when a general type-2 set is built
/// from an interval-type footprint.
struct SecondarySpec {
    enum class Kind {
        /// Triangle over [lower(x), upper(x)] peaking at the interval centre.
        triangular_at_center,
    };
    Kind kind = Kind::triangular_at_center;
};

/// Cuts a general type-2 set out of a principal footprint at the given
/// zLevels. With the triangular secondary, the footprint at level z is
/// [l + z*(c - l), u - z*(u - c)] with c the interval centre, so z = 1
/// collapses to the centre and z -> 0 recovers the principal footprint.
[[nodiscard]] inline GT2Set slice_gt2(const IT2Set& principal, const SecondarySpec& secondary,
                                      std::span<const double> levels) {
    if (levels.empty())
        throw std::invalid_argument("slice_gt2: needs at least one zLevel");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(levels[i] > 0.0) || levels[i] > 1.0)
            throw std::invalid_argument("slice_gt2: zLevels must lie in (0, 1]");
        if (i > 0 && !(levels[i - 1] < levels[i]))
            throw std::invalid_argument("slice_gt2: zLevels must be strictly increasing");
    }
    switch (secondary.kind) {
        case SecondarySpec::Kind::triangular_at_center:
            break;
    }
    auto lo = std::make_shared<const MembershipFunction>(principal.lower());
    auto up = std::make_shared<const MembershipFunction>(principal.upper());
    std::vector<ZSlice> slices;
    slices.reserve(levels.size());
    for (double z : levels) {
        // l + z*(c - l) = (1 - z/2)*l + (z/2)*u and symmetrically for the
        // upper bound; both blends meet at weight 0.5 when z = 1.
        MembershipFunction lower_z{Blend{lo, up, z / 2.0}};
        MembershipFunction upper_z{Blend{lo, up, 1.0 - z / 2.0}};
        slices.push_back(ZSlice{z, IT2Set(std::move(lower_z), std::move(upper_z))});
    }
    return GT2Set(std::move(slices));
}

/// A type-1 set as a general type-2 set: one slice at z = 1 whose footprint
/// has zero width.
[[nodiscard]] inline GT2Set promote(const T1Set& set) {
    std::vector<ZSlice> slices;
    slices.push_back(ZSlice{1.0, IT2Set(set.mf(), set.mf())});
    return GT2Set(std::move(slices));
}

/// An interval type-2 set as a general type-2 set: one slice at z = 1
/// carrying the full footprint.
[[nodiscard]] inline GT2Set promote(const IT2Set& set) {
    std::vector<ZSlice> slices;
    slices.push_back(ZSlice{1.0, set});
    return GT2Set(std::move(slices));
}

/// Secondary membership data at one domain point: the footprint interval at
/// each native zLevel.
struct VerticalSlice {
    struct Entry {
        double z;
        double lower;
        double upper;
    };
    double x;
    std::vector<Entry> entries;
};

[[nodiscard]] inline VerticalSlice vertical_slice(const GT2Set& set, double x) {
    VerticalSlice column{x, {}};
    column.entries.reserve(set.slices().size());
    for (const ZSlice& s : set.slices())
        column.entries.push_back({s.z, s.fou.lower()(x), s.fou.upper()(x)});
    return column;
}

/// Rebuilds a set from per-point secondary membership data. All columns must
/// list the same zLevels and each column's intervals must be nested (higher
/// z inside lower z). The resulting footprints interpolate linearly through
/// the column values and vanish outside the sampled range.
[[nodiscard]] inline GT2Set from_vertical_slices(std::span<const VerticalSlice> columns) {
    if (columns.empty())
        throw std::invalid_argument("from_vertical_slices: needs at least one column");
    const std::size_t n_levels = columns.front().entries.size();
    if (n_levels == 0)
        throw std::invalid_argument("from_vertical_slices: columns need at least one zLevel");
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const VerticalSlice& col = columns[j];
        if (j > 0 && !(columns[j - 1].x < col.x))
            throw std::invalid_argument("from_vertical_slices: column x must be strictly increasing");
        if (col.entries.size() != n_levels)
            throw std::invalid_argument("from_vertical_slices: columns list different zLevel counts");
        for (std::size_t i = 0; i < n_levels; ++i) {
            const auto& e = col.entries[i];
            if (e.z != columns.front().entries[i].z)
                throw std::invalid_argument("from_vertical_slices: columns list different zLevels");
            if (!(e.lower <= e.upper))
                throw std::invalid_argument("from_vertical_slices: interval lower exceeds upper");
            if (i > 0) {
                const auto& outer = col.entries[i - 1];
                if (e.lower < outer.lower || e.upper > outer.upper) {
                    std::ostringstream msg;
                    msg << "from_vertical_slices: interval at z = " << e.z
                        << " not nested at x = " << col.x;
                    throw std::invalid_argument(msg.str());
                }
            }
        }
    }
    std::vector<ZSlice> slices;
    slices.reserve(n_levels);
    for (std::size_t i = 0; i < n_levels; ++i) {
        PiecewiseLinear lower, upper;
        lower.vertices.reserve(columns.size());
        upper.vertices.reserve(columns.size());
        for (const VerticalSlice& col : columns) {
            lower.vertices.push_back({col.x, col.entries[i].lower});
            upper.vertices.push_back({col.x, col.entries[i].upper});
        }
        slices.push_back(ZSlice{columns.front().entries[i].z,
                                IT2Set(MembershipFunction(std::move(lower)),
                                       MembershipFunction(std::move(upper)))});
    }
    return GT2Set(std::move(slices));
}

[[nodiscard]] inline IT2Set scale(const IT2Set& set, double factor) {
    return {scale(set.lower(), factor), scale(set.upper(), factor)};
}

[[nodiscard]] inline GT2Set scale(const GT2Set& set, double factor) {
    std::vector<ZSlice> slices;
    slices.reserve(set.slices().size());
    for (const ZSlice& s : set.slices()) slices.push_back(ZSlice{s.z, scale(s.fou, factor)});
    return GT2Set(std::move(slices));
}

}  // namespace t2sim
