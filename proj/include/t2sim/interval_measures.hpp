#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "t2sim/domain_grid.hpp"
#include "t2sim/fuzzy_sets.hpp"
#include "t2sim/tnorm.hpp"

namespace t2sim {

/// Result of a similarity measure: a scalar in [0, 1] or an interval
/// [lo, hi] within it. Scalars report lower() == upper() so interval-style
/// aggregation works uniformly.
class SimilarityValue {
public:
    static SimilarityValue scalar(double v) { return SimilarityValue(v, v, false); }

    static SimilarityValue interval(double lo, double hi) { return SimilarityValue(lo, hi, true); }

    [[nodiscard]] bool is_interval() const noexcept { return interval_; }

    [[nodiscard]] double value() const {
        if (interval_)
            throw std::logic_error("SimilarityValue: interval result has no single value");
        return lo_;
    }

    [[nodiscard]] double lower() const noexcept { return lo_; }
    [[nodiscard]] double upper() const noexcept { return hi_; }

    [[nodiscard]] bool is_one() const noexcept { return lo_ == 1.0 && hi_ == 1.0; }
    [[nodiscard]] bool is_zero() const noexcept { return lo_ == 0.0 && hi_ == 0.0; }

    friend bool operator==(const SimilarityValue&, const SimilarityValue&) = default;

private:
    SimilarityValue(double lo, double hi, bool interval) : lo_(lo), hi_(hi), interval_(interval) {
        if (!(lo >= 0.0 && lo <= hi && hi <= 1.0))
            throw std::invalid_argument("SimilarityValue: requires 0 <= lo <= hi <= 1");
    }

    double lo_;
    double hi_;
    bool interval_;
};

inline std::ostream& operator<<(std::ostream& os, const SimilarityValue& v) {
    if (v.is_interval()) return os << "[" << v.lower() << ", " << v.upper() << "]";
    return os << v.value();
}

namespace detail {

struct SampledFou {
    std::vector<double> lower;
    std::vector<double> upper;
};

[[nodiscard]] inline SampledFou discretize(const IT2Set& set, const DomainGrid& grid) {
    return {t2sim::discretize(set.lower(), grid), t2sim::discretize(set.upper(), grid)};
}

[[nodiscard]] inline double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double g : v) m = std::max(m, g);
    return m;
}

}  // namespace detail

/// One minus the mean absolute difference of the footprint bounds: averages
/// |lower_a - lower_b| and |upper_a - upper_b| over the grid and subtracts
/// from 1. Scalar; 1 exactly for identical grades.
[[nodiscard]] inline double sim_zeng_li(const IT2Set& a, const IT2Set& b, const DomainGrid& grid) {
    auto fa = detail::discretize(a, grid);
    auto fb = detail::discretize(b, grid);
    double sum = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
        sum += std::abs(fa.lower[k] - fb.lower[k]) + std::abs(fa.upper[k] - fb.upper[k]);
    return std::clamp(1.0 - sum / (2.0 * static_cast<double>(grid.size())), 0.0, 1.0);
}

/// Ratio of the summed pointwise minima to the summed pointwise maxima of
/// both footprint bounds. Scalar; two empty sets count as identical (0/0 is
/// defined as 1).
[[nodiscard]] inline double sim_jaccard(const IT2Set& a, const IT2Set& b, const DomainGrid& grid) {
    auto fa = detail::discretize(a, grid);
    auto fb = detail::discretize(b, grid);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        num += std::min(fa.upper[k], fb.upper[k]) + std::min(fa.lower[k], fb.lower[k]);
        den += std::max(fa.upper[k], fb.upper[k]) + std::max(fa.lower[k], fb.lower[k]);
    }
    if (den == 0.0) return 1.0;
    return std::clamp(num / den, 0.0, 1.0);
}

/// Interval of the two overlap ratios: peak of the pointwise minimum over
/// the first set's own peak, once for the lower bounds and once for the
/// upper bounds. Not symmetric (the denominators come from the first
/// argument); a component with a flat-zero denominator is defined as 0.
[[nodiscard]] inline SimilarityValue sim_gorzalczany(const IT2Set& a, const IT2Set& b,
                                                     const DomainGrid& grid) {
    auto fa = detail::discretize(a, grid);
    auto fb = detail::discretize(b, grid);
    std::vector<double> min_lower(grid.size());
    std::vector<double> min_upper(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        min_lower[k] = std::min(fa.lower[k], fb.lower[k]);
        min_upper[k] = std::min(fa.upper[k], fb.upper[k]);
    }
    auto ratio = [](double num, double den) {
        if (den == 0.0) return 0.0;
        return std::clamp(num / den, 0.0, 1.0);
    };
    double s1 = ratio(detail::max_of(min_lower), detail::max_of(fa.lower));
    double s2 = ratio(detail::max_of(min_upper), detail::max_of(fa.upper));
    return SimilarityValue::interval(std::min(s1, s2), std::max(s1, s2));
}

namespace detail {

// Inclusion grade of a in b: the infimum over the grid of the capped
// pointwise terms 1 - (grade_a - grade_b), combining the lower and upper
// bounds with `combine` (min for the pessimistic grade, max for the
// optimistic one). Terms are written as 1 - (ga - gb) so identical grades
// contribute exactly 1.
template <typename Combine>
[[nodiscard]] double inclusion_grade(const SampledFou& fa, const SampledFou& fb, Combine combine) {
    double inf = 1.0;
    for (std::size_t k = 0; k < fa.lower.size(); ++k) {
        double from_lower = 1.0 - (fa.lower[k] - fb.lower[k]);
        double from_upper = 1.0 - (fa.upper[k] - fb.upper[k]);
        inf = std::min(inf, std::min(1.0, combine(from_lower, from_upper)));
    }
    return inf;
}

}  // namespace detail

/// Interval built from mutual inclusion grades: the pessimistic and
/// optimistic inclusion of each set in the other, combined with the t-norm.
/// Depends only on how far each set pokes out of the other, not on where the
/// sets sit in the domain.
[[nodiscard]] inline SimilarityValue sim_bustince(const IT2Set& a, const IT2Set& b,
                                                  const DomainGrid& grid,
                                                  const TNorm& tnorm = TNorm::minimum()) {
    auto fa = detail::discretize(a, grid);
    auto fb = detail::discretize(b, grid);
    auto min2 = [](double x, double y) { return std::min(x, y); };
    auto max2 = [](double x, double y) { return std::max(x, y); };
    double lo = tnorm(detail::inclusion_grade(fa, fb, min2), detail::inclusion_grade(fb, fa, min2));
    double hi = tnorm(detail::inclusion_grade(fa, fb, max2), detail::inclusion_grade(fb, fa, max2));
    lo = std::clamp(lo, 0.0, 1.0);
    hi = std::clamp(hi, 0.0, 1.0);
    return SimilarityValue::interval(lo, hi);
}

}  // namespace t2sim
