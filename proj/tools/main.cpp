// Command-line front end: dataset generation, training, evaluation and
// effective-model validation, all driven by a flat config file plus a seed.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqc/cli.hpp"

namespace {

struct SubArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_dir;
    bool out_set = false;
    int threads = 1;
    bool svg = false;
};

void add_common(CLI::App* sub, SubArgs& args) {
    sub->add_option("--config", args.config_path, "run configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", args.seed, "override train.seed from the config")
        ->each([&args](const std::string&) { args.seed_set = true; });
    sub->add_option("--out", args.out_dir, "override out.dir from the config")
        ->each([&args](const std::string&) { args.out_set = true; });
    sub->add_option("--threads", args.threads, "worker threads for gradient probes and scoring")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--svg", args.svg, "also render SVG plots of the emitted tables");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dissipative central-spin classifier"};
    app.require_subcommand(1);

    SubArgs args;
    add_common(app.add_subcommand("datagen", "sample a labeled 2-D dataset from a decision boundary"), args);
    add_common(app.add_subcommand("prepare", "train couplings and modes to prepare a target qubit state"), args);
    add_common(app.add_subcommand("train", "train the coupling matrices on a labeled dataset"), args);
    add_common(app.add_subcommand("eval", "evaluate a trained model: accuracy, ROC curve, AUC"), args);
    add_common(app.add_subcommand("validate", "compare full-system and effective steady states over gamma"), args);

    CLI11_PARSE(app, argc, argv);
    const std::string kind = app.get_subcommands().front()->get_name();

    try {
        const dqc::cli::RunConfig config = dqc::cli::parse_run_config(args.config_path);
        dqc::cli::CliOptions opts;
        if (args.seed_set) opts.seed = args.seed;
        if (args.out_set) opts.out_dir = args.out_dir;
        opts.threads = args.threads;
        opts.svg = args.svg;
        return dqc::cli::run_command(kind, config, opts);
    } catch (const dqc::NoSteadyState& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const dqc::DegenerateSteadyState& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const dqc::RouteMismatch& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const dqc::NonFiniteObjective& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
