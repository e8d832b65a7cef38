#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lureduce/commands.hpp"
#include "lureduce/io.hpp"

int main(int argc, char** argv) {
    using namespace lureduce;

    CLI::App app{"Local-unitary reduction of pure multi-site states"};
    app.set_version_flag("--version", std::string(io::kToolVersion));
    app.require_subcommand(1);

    cli::RandomOptions random_opts;
    auto* random = app.add_subcommand("random", "Write a seeded random normalized state");
    random->add_option("--n", random_opts.n, "Levels per site")->required();
    random->add_option("--l", random_opts.l, "Number of sites")->required();
    random->add_option("--seed", random_opts.seed, "PRNG seed")->required();
    random->add_option("--output", random_opts.output, "State file to write")->required();

    cli::ReduceCommandOptions reduce_opts;
    std::string strategy = "greedy";
    auto* reduce = app.add_subcommand("reduce", "Reduce a state and write state, trace and report");
    auto* input_opt = reduce->add_option("--input", reduce_opts.input, "State file");
    auto* batch_opt =
        reduce->add_option("--batch", reduce_opts.batch, "Reduce every state file in a directory");
    input_opt->excludes(batch_opt);
    reduce->add_option("--output", reduce_opts.output, "Reduced state file");
    reduce->add_option("--trace", reduce_opts.trace, "Rotation trace file");
    reduce->add_option("--report", reduce_opts.report, "Report file");
    reduce->add_option("--eps", reduce_opts.reduce.epsilon, "Residual tolerance")
        ->check(CLI::PositiveNumber);
    reduce->add_option("--strategy", strategy, "Pivot strategy")
        ->check(CLI::IsMember({"greedy", "round-robin"}));
    reduce->add_option("--max-iters", reduce_opts.reduce.max_iters_per_stage,
                       "Iteration cap per stage")
        ->check(CLI::NonNegativeNumber);
    reduce->add_option("--threshold", reduce_opts.reduce.threshold,
                       "Support-count threshold (default 10*eps)");

    cli::VerifyOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Undo a trace and compare with the original state");
    verify->add_option("--original", verify_opts.original, "Original state file")->required();
    verify->add_option("--trace", verify_opts.trace, "Trace file")->required();
    verify->add_option("--reduced", verify_opts.reduced, "Reduced state file")->required();

    std::filesystem::path schmidt_input;
    auto* schmidt = app.add_subcommand("schmidt", "Compare reduction and spectral Schmidt coefficients");
    schmidt->add_option("--input", schmidt_input, "Bipartite state file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kInvalidInput;
    }

    if (*random) return cli::cmd_random(random_opts, std::cout, std::cerr);
    if (*reduce) {
        if (reduce_opts.input.empty() && reduce_opts.batch.empty()) {
            std::cerr << "error: reduce needs --input or --batch\n";
            return cli::kInvalidInput;
        }
        reduce_opts.reduce.strategy = parse_strategy(strategy);
        return cli::cmd_reduce(reduce_opts, std::cout, std::cerr);
    }
    if (*verify) return cli::cmd_verify(verify_opts, std::cout, std::cerr);
    return cli::cmd_schmidt(schmidt_input, std::cout, std::cerr);
}
