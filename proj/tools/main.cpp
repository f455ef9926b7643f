#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace t2sim::cli;

    CLI::App app{"type-2 fuzzy set similarity toolkit"};
    app.require_subcommand(1);

    ComputeOptions copt;
    CLI::App* compute = app.add_subcommand("compute", "similarity of two set documents");
    compute->add_option("--measure", copt.measure, "zeng-li, jaccard, gorzalczany or bustince")
        ->capture_default_str();
    compute->add_option("--tnorm", copt.tnorm, "minimum, product or lukasiewicz (bustince only)")
        ->capture_default_str();
    compute->add_option("--points", copt.points, "grid resolution over the shared domain")
        ->capture_default_str();
    compute->add_option("--a", copt.file_a, "first set document")->required();
    compute->add_option("--b", copt.file_b, "second set document")->required();
    compute->add_flag("--csv", copt.csv, "print the bare full-precision value");

    MatrixOptions mopt;
    CLI::App* matrix = app.add_subcommand("matrix", "pairwise similarity matrix as CSV");
    matrix->add_option("--measure", mopt.measure, "zeng-li, jaccard, gorzalczany or bustince")
        ->capture_default_str();
    matrix->add_option("--tnorm", mopt.tnorm, "minimum, product or lukasiewicz (bustince only)")
        ->capture_default_str();
    matrix->add_option("--points", mopt.points, "grid resolution over the shared domain")
        ->capture_default_str();
    matrix->add_option("files", mopt.files, "set documents (at least two)")->expected(-1);

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "randomized axiom checks for one measure");
    verify->add_option("--measure", vopt.measure, "zeng-li, jaccard, gorzalczany or bustince")
        ->capture_default_str();
    verify->add_option("--tnorm", vopt.tnorm, "minimum, product or lukasiewicz (bustince only)")
        ->capture_default_str();
    verify->add_option("--points", vopt.points, "grid resolution of the check domain")
        ->capture_default_str();
    verify->add_option("--trials", vopt.trials, "random trials per axiom")->capture_default_str();
    verify->add_option("--seed", vopt.seed, "base seed for the trial generators")
        ->capture_default_str();

    CLI::App* reproduce =
        app.add_subcommand("reproduce-appendix", "recompute the bundled reference pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*compute) return cmd_compute(copt, std::cout, std::cerr);
        if (*matrix) return cmd_matrix(mopt, std::cout, std::cerr);
        if (*verify) return cmd_verify(vopt, std::cout, std::cerr);
        if (*reproduce) return cmd_reproduce_appendix(std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;  // unreachable: a subcommand is required
}
