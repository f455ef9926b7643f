#pragma once

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "set_document.hpp"
#include "t2sim/axiom_checks.hpp"
#include "t2sim/worked_example.hpp"
#include "t2sim/zslices_measure.hpp"

namespace t2sim::cli {

struct ComputeOptions {
    std::string measure = "jaccard";
    std::string tnorm = "minimum";
    int points = 100;
    std::string file_a;
    std::string file_b;
    bool csv = false;
};

struct MatrixOptions {
    std::string measure = "jaccard";
    std::string tnorm = "minimum";
    int points = 100;
    std::vector<std::string> files;
};

struct VerifyOptions {
    std::string measure = "jaccard";
    std::string tnorm = "minimum";
    int points = 100;
    int trials = 1000;
    std::uint64_t seed = 1;
};

namespace cmd_detail {

/// Display rounding used by all human-readable output.
inline std::string fmt3(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
}

/// Enough digits that parsing the text recovers the exact double.
inline std::string fmt_full(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

inline std::string human(const SimilarityValue& s) {
    if (s.is_interval())
        return "(" + fmt3(s.lower()) + ", " + fmt3(s.upper()) + ")  [" + fmt_full(s.lower()) +
               "; " + fmt_full(s.upper()) + "]";
    return fmt3(s.value()) + "  [" + fmt_full(s.value()) + "]";
}

inline std::string csv_cell(const SimilarityValue& s) {
    if (s.is_interval()) return fmt_full(s.lower()) + ";" + fmt_full(s.upper());
    return fmt_full(s.value());
}

inline MeasureId make_measure(const std::string& measure, const std::string& tnorm) {
    auto kind = parse_measure_kind(measure);
    if (!kind)
        throw DocumentError("unknown measure '" + measure +
                            "' (expected zeng-li, jaccard, gorzalczany or bustince)");
    auto t = parse_tnorm(tnorm);
    if (!t)
        throw DocumentError("unknown t-norm '" + tnorm +
                            "' (expected minimum, product or lukasiewicz)");
    return MeasureId{*kind, *t};
}

inline DomainGrid shared_grid(const std::vector<SetDocument>& docs, int points) {
    if (points < 2) throw DocumentError("--points must be at least 2");
    for (std::size_t i = 1; i < docs.size(); ++i)
        if (docs[i].domain_min != docs[0].domain_min || docs[i].domain_max != docs[0].domain_max)
            throw DocumentError("'" + docs[i].name + "' and '" + docs[0].name +
                                "' declare different domains; measures need one shared domain");
    DomainGrid grid(docs[0].domain_min, docs[0].domain_max, static_cast<std::size_t>(points));
    for (const SetDocument& doc : docs) {
        try {
            validate_on(doc.set, grid);
        } catch (const std::exception& e) {
            throw DocumentError("'" + doc.name + "': " + e.what());
        }
    }
    return grid;
}

inline const char* verdict_word(bool holds) { return holds ? "holds" : "violated"; }

inline const char* expected_word(Expectation e) {
    switch (e) {
        case Expectation::holds: return "holds";
        case Expectation::violated: return "violated";
        case Expectation::unasserted: return "(not checked)";
    }
    return "";  // unreachable
}

}  // namespace cmd_detail

/// Similarity of two set documents under the chosen measure. Exit 0 on
/// success, 1 on any parse or validation failure.
inline int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        MeasureId measure = cmd_detail::make_measure(opt.measure, opt.tnorm);
        std::vector<SetDocument> docs;
        docs.push_back(load_set_document(opt.file_a));
        docs.push_back(load_set_document(opt.file_b));
        DomainGrid grid = cmd_detail::shared_grid(docs, opt.points);
        SimilarityValue s = sim_zslices(docs[0].set, docs[1].set, measure, grid);
        if (opt.csv)
            out << cmd_detail::csv_cell(s) << "\n";
        else
            out << to_string(measure.kind) << "(" << docs[0].name << ", " << docs[1].name
                << ") = " << cmd_detail::human(s) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

/// Pairwise similarity matrix of the given documents as CSV (header row and
/// column carry the set names; interval cells hold "lo;hi").
inline int cmd_matrix(const MatrixOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        MeasureId measure = cmd_detail::make_measure(opt.measure, opt.tnorm);
        if (opt.files.size() < 2) throw DocumentError("matrix needs at least two set files");
        std::vector<SetDocument> docs;
        docs.reserve(opt.files.size());
        std::set<std::string> names;
        for (const std::string& file : opt.files) {
            docs.push_back(load_set_document(file));
            if (!names.insert(docs.back().name).second)
                throw DocumentError("duplicate set name '" + docs.back().name + "'");
        }
        DomainGrid grid = cmd_detail::shared_grid(docs, opt.points);
        out << "name";
        for (const SetDocument& doc : docs) out << "," << doc.name;
        out << "\n";
        for (const SetDocument& row : docs) {
            out << row.name;
            for (const SetDocument& col : docs)
                out << "," << cmd_detail::csv_cell(sim_zslices(row.set, col.set, measure, grid));
            out << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

/// Runs the randomized axiom checks for one measure and compares the
/// verdicts with the measure's documented profile. Exit 0 when they match,
/// 1 on bad options, 2 on any mismatch.
inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    MeasureId measure;
    CheckConfig cfg;
    try {
        measure = cmd_detail::make_measure(opt.measure, opt.tnorm);
        if (opt.trials < 1) throw DocumentError("--trials must be at least 1");
        if (opt.points < 2) throw DocumentError("--points must be at least 2");
        cfg.grid = DomainGrid(cfg.grid.x_min(), cfg.grid.x_max(), static_cast<std::size_t>(opt.points));
        cfg.trials = opt.trials;
        cfg.seed = opt.seed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    AxiomReport report = check_axioms(measure, cfg);
    AxiomProfile profile = axiom_profile(measure.kind);
    out << "measure: " << to_string(measure.kind);
    if (measure.kind == MeasureId::Kind::bustince) out << " (t-norm: " << measure.tnorm.name() << ")";
    out << ", trials: " << cfg.trials << ", seed: " << cfg.seed << "\n";
    out << std::left << std::setw(14) << "axiom" << std::setw(12) << "verdict" << std::setw(15)
        << "expected" << "trials\n";

    bool mismatch = false;
    auto row = [&](const char* axiom, const AxiomOutcome& outcome, Expectation expected) {
        bool gate = expected != Expectation::unasserted;
        bool ok = !gate || outcome.holds == (expected == Expectation::holds);
        mismatch = mismatch || !ok;
        out << std::left << std::setw(14) << axiom << std::setw(12)
            << cmd_detail::verdict_word(outcome.holds) << std::setw(15)
            << cmd_detail::expected_word(expected) << outcome.trials << (ok ? "" : "  MISMATCH")
            << "\n";
        if (!outcome.holds && outcome.witness) {
            const Witness& w = *outcome.witness;
            out << "    counterexample (trial " << outcome.trials << "): " << w.note << ";";
            for (const SimilarityValue& v : w.values) out << " " << cmd_detail::human(v);
            out << "\n";
        }
    };
    row("reflexivity", report.reflexivity, profile.reflexivity);
    row("symmetry", report.symmetry, profile.symmetry);
    row("transitivity", report.transitivity, profile.transitivity);
    row("overlapping", report.overlapping, profile.overlapping);

    if (mismatch) {
        err << "error: verdicts contradict the documented profile\n";
        return 2;
    }
    return 0;
}

/// Recomputes the bundled reference pair on its native 4-point domain and
/// checks the per-level and overall values. Exit 2 on any mismatch.
inline int cmd_reproduce_appendix(std::ostream& out, std::ostream& err) {
    namespace we = t2sim::worked_example;
    GT2Set b = we::set_b();
    GT2Set c = we::set_c();
    DomainGrid grid = we::grid();
    MeasureId jac{MeasureId::Kind::jaccard};

    bool ok = true;
    out << "per-level Jaccard over the zLevel union:\n";
    for (const we::ExpectedLevel& e : we::expected_levels()) {
        double got = sim_it2(b.fou_at(e.z), c.fou_at(e.z), jac, grid).value();
        bool pass = std::fabs(got - e.jaccard) <= we::tolerance;
        ok = ok && pass;
        out << "  z = " << cmd_detail::fmt3(e.z) << ": " << cmd_detail::human(
                   SimilarityValue::scalar(got))
            << ", expected " << cmd_detail::fmt3(e.jaccard) << (pass ? "" : "  MISMATCH") << "\n";
    }

    double weight_sum = 0.0;
    for (double z : zlevel_union(b, c)) weight_sum += z;
    bool weights_pass = std::fabs(weight_sum - we::expected_weight_sum) <= we::tolerance;
    ok = ok && weights_pass;
    out << "zLevel weight sum: " << cmd_detail::fmt3(weight_sum) << ", expected "
        << cmd_detail::fmt3(we::expected_weight_sum) << (weights_pass ? "" : "  MISMATCH") << "\n";

    double overall = sim_zslices(b, c, jac, grid).value();
    bool overall_pass = std::fabs(overall - we::expected_overall) <= we::tolerance;
    ok = ok && overall_pass;
    out << "overall: " << cmd_detail::human(SimilarityValue::scalar(overall)) << ", expected "
        << cmd_detail::fmt3(we::expected_overall) << (overall_pass ? "" : "  MISMATCH") << "\n";

    out << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) {
        err << "error: reproduction deviates from the reference values\n";
        return 2;
    }
    return 0;
}

}  // namespace t2sim::cli
