#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "t2sim/domain_grid.hpp"
#include "t2sim/fuzzy_sets.hpp"
#include "t2sim/interval_measures.hpp"
#include "t2sim/zslices_measure.hpp"

namespace t2sim {

/// What a verification run expects of one axiom. `unasserted` axioms are
/// reported but never gate a verdict.
enum class Expectation { holds, violated, unasserted };

/// Documented axiom profile of each measure: reflexivity, symmetry,
/// transitivity, overlapping. zeng-li and bustince give positive values for
/// disjoint sets (no overlapping), gorzalczany reports (1, 1) for certain
/// distinct pairs (no reflexivity); gorzalczany's symmetry is left
/// unasserted.
struct AxiomProfile {
    Expectation reflexivity;
    Expectation symmetry;
    Expectation transitivity;
    Expectation overlapping;
};

[[nodiscard]] inline AxiomProfile axiom_profile(MeasureId::Kind kind) noexcept {
    using E = Expectation;
    switch (kind) {
        case MeasureId::Kind::zeng_li: return {E::holds, E::holds, E::holds, E::violated};
        case MeasureId::Kind::jaccard: return {E::holds, E::holds, E::holds, E::holds};
        case MeasureId::Kind::gorzalczany: return {E::violated, E::unasserted, E::holds, E::holds};
        case MeasureId::Kind::bustince: return {E::holds, E::holds, E::holds, E::violated};
    }
    return {E::unasserted, E::unasserted, E::unasserted, E::unasserted};  // unreachable
}

/// Concrete counterexample: the offending sets and the values they produced.
struct Witness {
    std::vector<GT2Set> sets;
    std::vector<SimilarityValue> values;
    std::string note;
};

struct AxiomOutcome {
    bool holds;
    int trials;
    std::optional<Witness> witness;
};

/// Randomised check setup. Every trial reseeds its own generator from the
/// seed, the axiom tag and the trial index, so trials are order-independent
/// and could run concurrently without changing any verdict.
struct CheckConfig {
    DomainGrid grid = DomainGrid(0.0, 10.0, 100);
    std::vector<double> zlevels = {0.25, 0.5, 0.75, 1.0};
    int trials = 1000;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a + 0x9E3779B97F4A7C15ull * (b + 0x632BE59BD9B4E019ull);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

inline std::mt19937_64 trial_rng(const CheckConfig& cfg, std::uint64_t axiom_tag,
                                 std::uint64_t trial) {
    return std::mt19937_64(mix(mix(cfg.seed, axiom_tag), trial));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace detail

/// Random footprint with the given support. The upper function is a
/// trapezoid with a core at least `min_core` wide, capped at what the
/// support can hold; the lower function is a trapezoid dominated by it in
/// exact arithmetic (its support and core sit inside the upper's, its height
/// below the upper's). Lower heights stay strictly inside (0, 1) so every
/// measure's denominators are live.
[[nodiscard]] inline IT2Set random_it2_support(std::mt19937_64& rng, double a, double d,
                                               double min_core) {
    double w = d - a;
    min_core = std::min(min_core, 0.45 * w);
    double b = a + detail::uniform(rng, 0.10, 0.35) * w;
    double c = b + std::max(min_core, detail::uniform(rng, 0.10, 0.30) * w);
    double hl = detail::uniform(rng, 0.30, 0.90);
    double hu = detail::uniform(rng, std::max(hl, 0.60), 0.999);
    double mid = 0.5 * (b + c);
    double a2 = detail::uniform(rng, a, b);
    double b2 = detail::uniform(rng, b, mid);
    double c2 = detail::uniform(rng, mid, c);
    double d2 = detail::uniform(rng, c, d);
    return {MembershipFunction(Trapezoid{a2, b2, c2, d2, hl}),
            MembershipFunction(Trapezoid{a, b, c, d, hu})};
}

/// Random footprint whose support lies inside [lo, hi].
[[nodiscard]] inline IT2Set random_it2_in(std::mt19937_64& rng, double lo, double hi,
                                          double min_core) {
    double span = hi - lo;
    double a = lo + detail::uniform(rng, 0.0, 0.15) * span;
    double d = hi - detail::uniform(rng, 0.0, 0.15) * span;
    return random_it2_support(rng, a, d, min_core);
}

/// Random general type-2 set over [lo, hi]. A singleton level list at z = 1
/// promotes the footprint whole (the single-slice case); any other list
/// slices it with the triangular secondary.
[[nodiscard]] inline GT2Set random_gt2_in(std::mt19937_64& rng, double lo, double hi,
                                          double min_core, const std::vector<double>& levels) {
    IT2Set fou = random_it2_in(rng, lo, hi, min_core);
    if (levels.size() == 1 && levels[0] == 1.0) return promote(fou);
    return slice_gt2(fou, SecondarySpec{}, levels);
}

[[nodiscard]] inline GT2Set random_gt2(std::mt19937_64& rng, const CheckConfig& cfg) {
    return random_gt2_in(rng, cfg.grid.x_min(), cfg.grid.x_max(), 2.0 * cfg.grid.step(),
                         cfg.zlevels);
}

/// Pair whose footprints share an interior stretch of the domain, so both
/// upper functions are positive at common grid points.
[[nodiscard]] inline std::pair<GT2Set, GT2Set> random_overlapping_pair(std::mt19937_64& rng,
                                                                       const CheckConfig& cfg) {
    double lo = cfg.grid.x_min();
    double hi = cfg.grid.x_max();
    double span = hi - lo;
    double min_core = 2.0 * cfg.grid.step();
    double len = detail::uniform(rng, 0.25, 0.45) * span;
    double p = detail::uniform(rng, lo, hi - len);
    auto one = [&] {
        double a = detail::uniform(rng, lo, p);
        double d = detail::uniform(rng, p + len, hi);
        IT2Set fou = random_it2_support(rng, a, d, min_core);
        if (cfg.zlevels.size() == 1 && cfg.zlevels[0] == 1.0) return promote(fou);
        return slice_gt2(fou, SecondarySpec{}, cfg.zlevels);
    };
    GT2Set first = one();
    GT2Set second = one();
    return {std::move(first), std::move(second)};
}

/// Pair with disjoint supports: one set left of the domain midpoint, one
/// right of it, separated by one grid step or 2% of the domain, whichever is
/// larger, capped at a quarter of the domain so both halves keep room on any
/// grid.
[[nodiscard]] inline std::pair<GT2Set, GT2Set> random_disjoint_pair(std::mt19937_64& rng,
                                                                    const CheckConfig& cfg) {
    double lo = cfg.grid.x_min();
    double hi = cfg.grid.x_max();
    double mid = 0.5 * (lo + hi);
    double gap = std::min(std::max(cfg.grid.step(), 0.02 * (hi - lo)), 0.25 * (hi - lo));
    double min_core = 2.0 * cfg.grid.step();
    GT2Set left = random_gt2_in(rng, lo, mid - gap, min_core, cfg.zlevels);
    GT2Set right = random_gt2_in(rng, mid + gap, hi, min_core, cfg.zlevels);
    return {std::move(left), std::move(right)};
}

/// True when both sets list the same zLevels and carry identical grades at
/// every grid point of every slice.
[[nodiscard]] inline bool identical_on(const GT2Set& a, const GT2Set& b, const DomainGrid& grid) {
    const auto& sa = a.slices();
    const auto& sb = b.slices();
    if (sa.size() != sb.size()) return false;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa[i].z != sb[i].z) return false;
        if (discretize(sa[i].fou.lower(), grid) != discretize(sb[i].fou.lower(), grid))
            return false;
        if (discretize(sa[i].fou.upper(), grid) != discretize(sb[i].fou.upper(), grid))
            return false;
    }
    return true;
}

/// Copy of `set` that differs at one grid point of its lowest slice: the
/// upper function is raised halfway to 1 there (or, if the upper is already
/// near 1 everywhere, the lower function is halved instead). Touching only
/// the lowest slice's outer bound keeps the slices nested.
[[nodiscard]] inline GT2Set perturb(const GT2Set& set, const DomainGrid& grid,
                                    std::mt19937_64& rng) {
    std::vector<ZSlice> slices = set.slices();
    const IT2Set& fou = slices.front().fou;
    std::vector<double> upper = discretize(fou.upper(), grid);
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < upper.size(); ++k)
        if (upper[k] <= 0.95) candidates.push_back(k);
    if (!candidates.empty()) {
        std::size_t k = candidates[std::uniform_int_distribution<std::size_t>(
            0, candidates.size() - 1)(rng)];
        upper[k] = 0.5 * (upper[k] + 1.0);
        slices.front().fou =
            IT2Set(fou.lower(), MembershipFunction(Sampled{grid, std::move(upper)}));
        return GT2Set(std::move(slices));
    }
    std::vector<double> lower = discretize(fou.lower(), grid);
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (lower[k] >= 0.05) candidates.push_back(k);
    if (candidates.empty()) return set;
    std::size_t k =
        candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    lower[k] *= 0.5;
    slices.front().fou = IT2Set(MembershipFunction(Sampled{grid, std::move(lower)}), fou.upper());
    return GT2Set(std::move(slices));
}

namespace detail {

inline constexpr std::uint64_t tag_reflexivity = 0xA1;
inline constexpr std::uint64_t tag_symmetry = 0xA2;
inline constexpr std::uint64_t tag_transitivity = 0xA3;
inline constexpr std::uint64_t tag_overlapping = 0xA4;

}  // namespace detail

/// Reflexivity: a set is fully similar to itself and not fully similar to
/// any set with different grades. Each trial checks one random set against
/// itself and against a one-point perturbation of itself.
[[nodiscard]] inline AxiomOutcome check_reflexivity(const MeasureId& measure,
                                                    const CheckConfig& cfg) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto rng = detail::trial_rng(cfg, detail::tag_reflexivity, static_cast<std::uint64_t>(trial));
        GT2Set a = random_gt2(rng, cfg);
        SimilarityValue self = sim_zslices(a, a, measure, cfg.grid);
        if (!self.is_one())
            return {false, trial + 1,
                    Witness{{a, a}, {self}, "self-similarity is not 1"}};
        GT2Set b = perturb(a, cfg.grid, rng);
        if (identical_on(a, b, cfg.grid)) continue;
        SimilarityValue other = sim_zslices(a, b, measure, cfg.grid);
        if (other.is_one())
            return {false, trial + 1,
                    Witness{{a, b}, {other}, "sets with different grades report similarity 1"}};
    }
    return {true, cfg.trials, std::nullopt};
}

/// Symmetry: swapping the arguments leaves the value unchanged, compared
/// exactly.
[[nodiscard]] inline AxiomOutcome check_symmetry(const MeasureId& measure,
                                                 const CheckConfig& cfg) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto rng = detail::trial_rng(cfg, detail::tag_symmetry, static_cast<std::uint64_t>(trial));
        auto [a, b] = random_overlapping_pair(rng, cfg);
        SimilarityValue ab = sim_zslices(a, b, measure, cfg.grid);
        SimilarityValue ba = sim_zslices(b, a, measure, cfg.grid);
        if (ab.lower() != ba.lower() || ab.upper() != ba.upper())
            return {false, trial + 1,
                    Witness{{a, b}, {ab, ba}, "value changes when the arguments swap"}};
    }
    return {true, cfg.trials, std::nullopt};
}

/// Transitivity: along a pointwise-ordered chain A >= B >= C (built by
/// scaling one random set's grades by 1 >= f_B >= f_C), the middle set is at
/// least as similar to A as the far one, endpoint-wise.
[[nodiscard]] inline AxiomOutcome check_transitivity(const MeasureId& measure,
                                                     const CheckConfig& cfg) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto rng = detail::trial_rng(cfg, detail::tag_transitivity, static_cast<std::uint64_t>(trial));
        GT2Set a = random_gt2(rng, cfg);
        double f1 = detail::uniform(rng, 0.05, 1.0);
        double f2 = detail::uniform(rng, 0.05, 1.0);
        double fb = std::max(f1, f2);
        double fc = std::min(f1, f2);
        GT2Set b = scale(a, fb);
        GT2Set c = scale(a, fc);
        SimilarityValue ab = sim_zslices(a, b, measure, cfg.grid);
        SimilarityValue ac = sim_zslices(a, c, measure, cfg.grid);
        if (ab.lower() < ac.lower() || ab.upper() < ac.upper())
            return {false, trial + 1,
                    Witness{{a, b, c},
                            {ab, ac},
                            "nearer set in an ordered chain is less similar than the farther one"}};
    }
    return {true, cfg.trials, std::nullopt};
}

/// Overlapping: the value is nonzero exactly when the sets share a grid
/// point where both upper functions are positive. Each trial checks one
/// overlapping and one disjoint pair.
[[nodiscard]] inline AxiomOutcome check_overlapping(const MeasureId& measure,
                                                    const CheckConfig& cfg) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
        auto rng = detail::trial_rng(cfg, detail::tag_overlapping, static_cast<std::uint64_t>(trial));
        auto [ao, bo] = random_overlapping_pair(rng, cfg);
        SimilarityValue so = sim_zslices(ao, bo, measure, cfg.grid);
        if (so.is_zero())
            return {false, trial + 1,
                    Witness{{ao, bo}, {so}, "overlapping pair reports similarity 0"}};
        auto [ad, bd] = random_disjoint_pair(rng, cfg);
        SimilarityValue sd = sim_zslices(ad, bd, measure, cfg.grid);
        if (!sd.is_zero())
            return {false, trial + 1,
                    Witness{{ad, bd}, {sd}, "disjoint pair reports a nonzero similarity"}};
    }
    return {true, cfg.trials, std::nullopt};
}

struct AxiomReport {
    MeasureId measure;
    AxiomOutcome reflexivity;
    AxiomOutcome symmetry;
    AxiomOutcome transitivity;
    AxiomOutcome overlapping;
};

[[nodiscard]] inline AxiomReport check_axioms(const MeasureId& measure, const CheckConfig& cfg) {
    return {measure, check_reflexivity(measure, cfg), check_symmetry(measure, cfg),
            check_transitivity(measure, cfg), check_overlapping(measure, cfg)};
}

}  // namespace t2sim
