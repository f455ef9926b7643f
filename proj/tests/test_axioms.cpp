#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "t2sim/axiom_checks.hpp"

using namespace t2sim;

namespace {

CheckConfig quick_config() {
    CheckConfig cfg;
    cfg.trials = 120;
    cfg.seed = 7;
    return cfg;
}

bool uppers_share_positive_point(const GT2Set& a, const GT2Set& b, const DomainGrid& grid) {
    const IT2Set& fa = a.slices().front().fou;
    const IT2Set& fb = b.slices().front().fou;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double x = grid.point(k);
        if (fa.upper()(x) > 0.0 && fb.upper()(x) > 0.0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("documented axiom profiles") {
    using E = Expectation;
    AxiomProfile p = axiom_profile(MeasureId::Kind::zeng_li);
    REQUIRE(p.reflexivity == E::holds);
    REQUIRE(p.symmetry == E::holds);
    REQUIRE(p.transitivity == E::holds);
    REQUIRE(p.overlapping == E::violated);

    p = axiom_profile(MeasureId::Kind::jaccard);
    REQUIRE(p.reflexivity == E::holds);
    REQUIRE(p.symmetry == E::holds);
    REQUIRE(p.transitivity == E::holds);
    REQUIRE(p.overlapping == E::holds);

    p = axiom_profile(MeasureId::Kind::gorzalczany);
    REQUIRE(p.reflexivity == E::violated);
    REQUIRE(p.symmetry == E::unasserted);
    REQUIRE(p.transitivity == E::holds);
    REQUIRE(p.overlapping == E::holds);

    p = axiom_profile(MeasureId::Kind::bustince);
    REQUIRE(p.reflexivity == E::holds);
    REQUIRE(p.symmetry == E::holds);
    REQUIRE(p.transitivity == E::holds);
    REQUIRE(p.overlapping == E::violated);
}

TEST_CASE("random sets are well-formed on the check grid") {
    CheckConfig cfg = quick_config();
    for (int trial = 0; trial < 40; ++trial) {
        auto rng = detail::trial_rng(cfg, 0xEE, static_cast<std::uint64_t>(trial));
        GT2Set set = random_gt2(rng, cfg);
        REQUIRE_NOTHROW(validate_on(set, cfg.grid));
        REQUIRE(set.zlevels() == cfg.zlevels);
    }
}

TEST_CASE("a singleton level list at one produces single-slice sets") {
    CheckConfig cfg = quick_config();
    cfg.zlevels = {1.0};
    auto rng = detail::trial_rng(cfg, 0xEF, 0);
    GT2Set set = random_gt2(rng, cfg);
    REQUIRE(set.slices().size() == 1);
    REQUIRE(set.slices().front().z == 1.0);
    REQUIRE_NOTHROW(validate_on(set, cfg.grid));
}

TEST_CASE("overlapping pairs share a positive grid point, disjoint pairs do not") {
    CheckConfig cfg = quick_config();
    for (int trial = 0; trial < 40; ++trial) {
        auto rng = detail::trial_rng(cfg, 0xF0, static_cast<std::uint64_t>(trial));
        auto [ao, bo] = random_overlapping_pair(rng, cfg);
        REQUIRE_NOTHROW(validate_on(ao, cfg.grid));
        REQUIRE_NOTHROW(validate_on(bo, cfg.grid));
        REQUIRE(uppers_share_positive_point(ao, bo, cfg.grid));
        auto [ad, bd] = random_disjoint_pair(rng, cfg);
        REQUIRE_NOTHROW(validate_on(ad, cfg.grid));
        REQUIRE_NOTHROW(validate_on(bd, cfg.grid));
        REQUIRE_FALSE(uppers_share_positive_point(ad, bd, cfg.grid));
    }
}

TEST_CASE("perturbation changes one grade and keeps the set well-formed") {
    CheckConfig cfg = quick_config();
    for (int trial = 0; trial < 40; ++trial) {
        auto rng = detail::trial_rng(cfg, 0xF1, static_cast<std::uint64_t>(trial));
        GT2Set a = random_gt2(rng, cfg);
        GT2Set b = perturb(a, cfg.grid, rng);
        REQUIRE_NOTHROW(validate_on(b, cfg.grid));
        REQUIRE(b.zlevels() == a.zlevels());
        REQUIRE(identical_on(a, a, cfg.grid));
        REQUIRE_FALSE(identical_on(a, b, cfg.grid));
        std::vector<double> ua = discretize(a.slices().front().fou.upper(), cfg.grid);
        std::vector<double> ub = discretize(b.slices().front().fou.upper(), cfg.grid);
        std::size_t changed = 0;
        for (std::size_t k = 0; k < ua.size(); ++k)
            if (ua[k] != ub[k]) ++changed;
        REQUIRE(changed == 1);
    }
}

TEST_CASE("mean-difference measure: reflexive, symmetric, transitive, never zero apart") {
    CheckConfig cfg = quick_config();
    AxiomReport r = check_axioms(MeasureId{MeasureId::Kind::zeng_li}, cfg);
    REQUIRE(r.reflexivity.holds);
    REQUIRE(r.symmetry.holds);
    REQUIRE(r.transitivity.holds);
    REQUIRE_FALSE(r.overlapping.holds);
    REQUIRE(r.overlapping.witness.has_value());
    REQUIRE(r.overlapping.witness->values.at(0).lower() > 0.0);
}

TEST_CASE("min-over-max ratio satisfies all four axioms") {
    CheckConfig cfg = quick_config();
    AxiomReport r = check_axioms(MeasureId{MeasureId::Kind::jaccard}, cfg);
    REQUIRE(r.reflexivity.holds);
    REQUIRE(r.symmetry.holds);
    REQUIRE(r.transitivity.holds);
    REQUIRE(r.overlapping.holds);
    REQUIRE(r.reflexivity.trials == cfg.trials);
    REQUIRE_FALSE(r.overlapping.witness.has_value());
}

TEST_CASE("overlap-ratio measure fails reflexivity with a full-similarity witness") {
    CheckConfig cfg = quick_config();
    AxiomReport r = check_axioms(MeasureId{MeasureId::Kind::gorzalczany}, cfg);
    REQUIRE_FALSE(r.reflexivity.holds);
    REQUIRE(r.reflexivity.witness.has_value());
    REQUIRE(r.reflexivity.witness->values.at(0).is_one());
    REQUIRE(r.reflexivity.witness->sets.size() == 2);
    REQUIRE_FALSE(
        identical_on(r.reflexivity.witness->sets[0], r.reflexivity.witness->sets[1], cfg.grid));
    REQUIRE(r.transitivity.holds);
    REQUIRE(r.overlapping.holds);
}

TEST_CASE("inclusion measure: reflexive, symmetric, transitive, never zero apart") {
    CheckConfig cfg = quick_config();
    AxiomReport r = check_axioms(MeasureId{MeasureId::Kind::bustince}, cfg);
    REQUIRE(r.reflexivity.holds);
    REQUIRE(r.symmetry.holds);
    REQUIRE(r.transitivity.holds);
    REQUIRE_FALSE(r.overlapping.holds);
    REQUIRE(r.overlapping.witness.has_value());
    REQUIRE(r.overlapping.witness->values.at(0).upper() > 0.0);
}

TEST_CASE("single-slice sets reach the same verdicts as multi-level sets") {
    CheckConfig multi = quick_config();
    multi.trials = 80;
    CheckConfig single = multi;
    single.zlevels = {1.0};
    for (auto kind : {MeasureId::Kind::zeng_li, MeasureId::Kind::jaccard,
                      MeasureId::Kind::gorzalczany, MeasureId::Kind::bustince}) {
        MeasureId m{kind};
        AxiomReport rm = check_axioms(m, multi);
        AxiomReport rs = check_axioms(m, single);
        REQUIRE(rm.reflexivity.holds == rs.reflexivity.holds);
        REQUIRE(rm.transitivity.holds == rs.transitivity.holds);
        REQUIRE(rm.overlapping.holds == rs.overlapping.holds);
        if (kind != MeasureId::Kind::gorzalczany)
            REQUIRE(rm.symmetry.holds == rs.symmetry.holds);
    }
}

TEST_CASE("failed checks stop early and report the trial count") {
    CheckConfig cfg = quick_config();
    AxiomOutcome out = check_overlapping(MeasureId{MeasureId::Kind::zeng_li}, cfg);
    REQUIRE_FALSE(out.holds);
    REQUIRE(out.trials >= 1);
    REQUIRE(out.trials <= cfg.trials);
    AxiomOutcome ok = check_symmetry(MeasureId{MeasureId::Kind::jaccard}, cfg);
    REQUIRE(ok.holds);
    REQUIRE(ok.trials == cfg.trials);
}
