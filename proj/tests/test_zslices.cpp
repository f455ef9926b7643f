#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "t2sim/fuzzy_sets.hpp"
#include "t2sim/worked_example.hpp"
#include "t2sim/zslices_measure.hpp"

using namespace t2sim;
using Catch::Matchers::WithinAbs;

namespace {

IT2Set random_sampled(std::mt19937_64& rng, const DomainGrid& g) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> lower(g.size()), upper(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        double x = u(rng), y = u(rng);
        lower[k] = std::min(x, y);
        upper[k] = std::max(x, y);
    }
    return {MembershipFunction{Sampled{g, lower}}, MembershipFunction{Sampled{g, upper}}};
}

IT2Set trapezoid_pair(double offset) {
    return {MembershipFunction{Trapezoid{1.0 + offset, 2.0 + offset, 3.0 + offset, 4.0 + offset, 0.8}},
            MembershipFunction{Trapezoid{0.5 + offset, 1.5 + offset, 3.5 + offset, 4.5 + offset, 1.0}}};
}

std::vector<MeasureId> all_measures() {
    return {MeasureId{MeasureId::Kind::zeng_li}, MeasureId{MeasureId::Kind::jaccard},
            MeasureId{MeasureId::Kind::gorzalczany}, MeasureId{MeasureId::Kind::bustince}};
}

// Per-level ratios of the bundled reference pair, kept as explicit fractions
// computed from its sampled grades by hand.
constexpr double kLevel033 = 3.485 / 3.928;
constexpr double kLevel050 = 3.6 / 3.815;
constexpr double kLevel066 = 3.582 / 3.798;
constexpr double kLevel075 = 3.426 / 3.852;

}  // namespace

TEST_CASE("zLevel union merges, sorts and deduplicates") {
    GT2Set b = worked_example::set_b();
    GT2Set c = worked_example::set_c();
    REQUIRE(zlevel_union(b, c) == std::vector<double>{0.25, 0.33, 0.5, 0.66, 0.75, 1.0});
    REQUIRE(zlevel_union(c, b) == std::vector<double>{0.25, 0.33, 0.5, 0.66, 0.75, 1.0});
    REQUIRE(zlevel_union(b, b) == b.zlevels());
    IT2Set fou = trapezoid_pair(0.0);
    REQUIRE(zlevel_union(promote(fou), promote(fou)) == std::vector<double>{1.0});
}

TEST_CASE("reference pair: per-level ratios match the hand computation") {
    GT2Set b = worked_example::set_b();
    GT2Set c = worked_example::set_c();
    DomainGrid g = worked_example::grid();
    MeasureId jac{MeasureId::Kind::jaccard};
    auto level = [&](double z) { return sim_it2(b.fou_at(z), c.fou_at(z), jac, g).lower(); };
    REQUIRE(level(0.25) == 1.0);
    REQUIRE_THAT(level(0.33), WithinAbs(kLevel033, 1e-12));
    REQUIRE_THAT(level(0.5), WithinAbs(kLevel050, 1e-12));
    REQUIRE_THAT(level(0.66), WithinAbs(kLevel066, 1e-12));
    REQUIRE_THAT(level(0.75), WithinAbs(kLevel075, 1e-12));
    REQUIRE(level(1.0) == 1.0);
    for (const auto& e : worked_example::expected_levels())
        REQUIRE_THAT(level(e.z), WithinAbs(e.jaccard, worked_example::tolerance));
}

TEST_CASE("reference pair: overall similarity matches the hand computation") {
    GT2Set b = worked_example::set_b();
    GT2Set c = worked_example::set_c();
    DomainGrid g = worked_example::grid();
    SimilarityValue s = sim_zslices(b, c, MeasureId{MeasureId::Kind::jaccard}, g);
    REQUIRE_FALSE(s.is_interval());
    double expected = (0.25 * 1.0 + 0.33 * kLevel033 + 0.5 * kLevel050 + 0.66 * kLevel066 +
                       0.75 * kLevel075 + 1.0 * 1.0) /
                      (0.25 + 0.33 + 0.5 + 0.66 + 0.75 + 1.0);
    REQUIRE_THAT(s.value(), WithinAbs(expected, 1e-12));
    REQUIRE_THAT(s.value(), WithinAbs(worked_example::expected_overall, worked_example::tolerance));
    REQUIRE_THAT(0.25 + 0.33 + 0.5 + 0.66 + 0.75 + 1.0,
                 WithinAbs(worked_example::expected_weight_sum, 1e-12));
}

TEST_CASE("reference pair: symmetric measures agree in both argument orders") {
    GT2Set b = worked_example::set_b();
    GT2Set c = worked_example::set_c();
    DomainGrid g = worked_example::grid();
    for (auto kind : {MeasureId::Kind::zeng_li, MeasureId::Kind::jaccard, MeasureId::Kind::bustince}) {
        MeasureId m{kind};
        REQUIRE(sim_zslices(b, c, m, g) == sim_zslices(c, b, m, g));
    }
}

TEST_CASE("a single shared level reproduces the interval measure bit for bit") {
    DomainGrid g(0, 10, 100);
    std::mt19937_64 rng(43);
    for (int i = 0; i < 25; ++i) {
        IT2Set a = random_sampled(rng, g);
        IT2Set b = random_sampled(rng, g);
        for (const MeasureId& m : all_measures())
            REQUIRE(sim_zslices(promote(a), promote(b), m, g) == sim_it2(a, b, m, g));
    }
}

TEST_CASE("aggregate stays within the per-level range, endpoint-wise") {
    DomainGrid g(0, 10, 101);
    std::vector<double> za{0.2, 0.5, 0.8, 1.0};
    std::vector<double> zb{0.3, 0.6, 1.0};
    GT2Set a = slice_gt2(trapezoid_pair(0.0), SecondarySpec{}, za);
    GT2Set b = slice_gt2(trapezoid_pair(1.5), SecondarySpec{}, zb);
    for (const MeasureId& m : all_measures()) {
        double lo_min = 1.0, lo_max = 0.0, hi_min = 1.0, hi_max = 0.0;
        for (double z : zlevel_union(a, b)) {
            SimilarityValue s = sim_it2(a.fou_at(z), b.fou_at(z), m, g);
            lo_min = std::min(lo_min, s.lower());
            lo_max = std::max(lo_max, s.lower());
            hi_min = std::min(hi_min, s.upper());
            hi_max = std::max(hi_max, s.upper());
        }
        SimilarityValue agg = sim_zslices(a, b, m, g);
        REQUIRE(agg.lower() >= lo_min - 1e-12);
        REQUIRE(agg.lower() <= lo_max + 1e-12);
        REQUIRE(agg.upper() >= hi_min - 1e-12);
        REQUIRE(agg.upper() <= hi_max + 1e-12);
    }
}

TEST_CASE("aggregation is exactly the zLevel-weighted mean of resampled slices") {
    DomainGrid g(0, 10, 101);
    std::vector<double> za{0.2, 0.5, 0.8, 1.0};
    std::vector<double> zb{0.3, 0.6, 1.0};
    GT2Set a = slice_gt2(trapezoid_pair(0.0), SecondarySpec{}, za);
    GT2Set b = slice_gt2(trapezoid_pair(0.7), SecondarySpec{}, zb);
    for (const MeasureId& m : all_measures()) {
        double num_lo = 0.0, num_hi = 0.0, den = 0.0;
        for (double z : zlevel_union(a, b)) {
            SimilarityValue s = sim_it2(a.fou_at(z), b.fou_at(z), m, g);
            num_lo += z * s.lower();
            num_hi += z * s.upper();
            den += z;
        }
        SimilarityValue agg = sim_zslices(a, b, m, g);
        REQUIRE(agg.lower() == std::clamp(num_lo / den, 0.0, 1.0));
        REQUIRE(agg.upper() == std::clamp(num_hi / den, agg.lower(), 1.0));
    }
}

TEST_CASE("scalar measures aggregate to scalars, interval measures to intervals") {
    DomainGrid g(0, 10, 101);
    GT2Set a = slice_gt2(trapezoid_pair(0.0), SecondarySpec{}, std::vector<double>{0.5, 1.0});
    GT2Set b = slice_gt2(trapezoid_pair(1.0), SecondarySpec{}, std::vector<double>{0.5, 1.0});
    REQUIRE_FALSE(sim_zslices(a, b, MeasureId{MeasureId::Kind::zeng_li}, g).is_interval());
    REQUIRE_FALSE(sim_zslices(a, b, MeasureId{MeasureId::Kind::jaccard}, g).is_interval());
    REQUIRE(sim_zslices(a, b, MeasureId{MeasureId::Kind::gorzalczany}, g).is_interval());
    REQUIRE(sim_zslices(a, b, MeasureId{MeasureId::Kind::bustince}, g).is_interval());
}

TEST_CASE("identical zSliced sets have similarity one under every reflexive measure") {
    DomainGrid g(0, 10, 101);
    GT2Set a = slice_gt2(trapezoid_pair(2.0), SecondarySpec{},
                         std::vector<double>{0.25, 0.5, 0.75, 1.0});
    for (auto kind : {MeasureId::Kind::zeng_li, MeasureId::Kind::jaccard, MeasureId::Kind::bustince})
        REQUIRE(sim_zslices(a, a, MeasureId{kind}, g).is_one());
}

TEST_CASE("measure names round-trip through parsing") {
    for (auto kind : {MeasureId::Kind::zeng_li, MeasureId::Kind::jaccard,
                      MeasureId::Kind::gorzalczany, MeasureId::Kind::bustince})
        REQUIRE(parse_measure_kind(to_string(kind)) == kind);
    REQUIRE_FALSE(parse_measure_kind("euclidean").has_value());
    REQUIRE(MeasureId{MeasureId::Kind::gorzalczany}.interval_valued());
    REQUIRE_FALSE(MeasureId{MeasureId::Kind::zeng_li}.interval_valued());
}
