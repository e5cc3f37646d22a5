#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace hermitrig::cli;

    CLI::App app{"Hermite trigonometric interpolation on uniform odd grids"};
    app.require_subcommand(1);

    BuildOptions build_opts;
    CLI::App* build = app.add_subcommand(
        "build", "Build an interpolant from a sample file and write its coefficients");
    build->add_option("-i,--input", build_opts.input, "sample file (JSON)")->required();
    build->add_option("-o,--output", build_opts.output, "coefficient file to write")->required();
    std::string build_mode;
    build->add_option("--mode", build_mode, "strict | paper (overrides the file's mode)")
        ->check(CLI::IsMember({"strict", "paper"}));
    build->add_flag("-v,--verbose", build_opts.verbose, "print condition estimates");

    EvalOptions eval_opts;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a coefficient file, CSV output");
    eval->add_option("-c,--coeffs", eval_opts.coeffs, "coefficient file")->required();
    eval->add_option("--points", eval_opts.points,
                     "comma list (\"0,1.5\") or range \"start:stop:count\"")
        ->required();
    eval->add_option("--order", eval_opts.order, "derivative order (default 0)");
    std::string eval_output;
    eval->add_option("-o,--output", eval_output, "CSV file (stdout when omitted)");

    VerifyOptions verify_opts;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check a sample file against the dense collocation reference");
    verify->add_option("-i,--input", verify_opts.input, "sample file (JSON)")->required();
    std::string verify_mode;
    verify->add_option("--mode", verify_mode, "strict | paper (overrides the file's mode)")
        ->check(CLI::IsMember({"strict", "paper"}));
    verify->add_flag("-v,--verbose", verify_opts.verbose, "print condition estimates");

    ConvergenceOptions conv_opts;
    CLI::App* convergence = app.add_subcommand(
        "convergence", "Error study for a built-in analytic function, CSV output");
    convergence->add_option("--function", conv_opts.function,
                            "exp_sin | inv_two_plus_cos | cos3_plus_sin")
        ->required();
    convergence->add_option("--p", conv_opts.p, "highest derivative order (default 1)");
    convergence->add_option("--grid", conv_opts.family, "grid family, 0 or 1 (default 0)");
    convergence->add_option("--n", conv_opts.n_list, "comma-separated n values")->required();
    std::string conv_output;
    convergence->add_option("-o,--output", conv_output, "CSV file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& parse_err) {
        app.exit(parse_err);
        return kExitInputError;
    }

    if (build->parsed()) {
        if (!build_mode.empty()) {
            build_opts.mode = build_mode;
        }
        return cmd_build(build_opts, std::cout, std::cerr);
    }
    if (eval->parsed()) {
        if (!eval_output.empty()) {
            eval_opts.output = eval_output;
        }
        return cmd_eval(eval_opts, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        if (!verify_mode.empty()) {
            verify_opts.mode = verify_mode;
        }
        return cmd_verify(verify_opts, std::cout, std::cerr);
    }
    if (convergence->parsed()) {
        if (!conv_output.empty()) {
            conv_opts.output = conv_output;
        }
        return cmd_convergence(conv_opts, std::cout, std::cerr);
    }
    return kExitInputError;
}
