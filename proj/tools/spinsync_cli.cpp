#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "spinsync/acceptance.hpp"
#include "spinsync/run_config.hpp"
#include "spinsync/sweep.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::vector<std::string> overrides;
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool config_required) {
    auto* opt = cmd->add_option("--config", args.config_path, "JSON configuration file");
    if (config_required) opt->required();
    cmd->add_option("--out", args.out_path, "output file (stdout when omitted)");
    cmd->add_option("--set", args.overrides,
                    "dotted-path override, e.g. --set drive.delta_b_mhz=0.2");
    cmd->add_option("--jobs", args.jobs, "number of worker threads for sweeps");
}

int run_with_output(const CommonArgs& args,
                    const std::function<void(std::ostream&)>& body) {
    if (args.out_path.empty()) {
        body(std::cout);
        return 0;
    }
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << args.out_path << "'\n";
        return 2;
    }
    body(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinsync: driven dissipative spin-1 synchronization models"};
    app.require_subcommand(1);

    CommonArgs sweep_args, husimi_args, steady_args, evolve_args, acceptance_args;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "parameter sweep (alpha, delta_b or beta) to CSV");
    add_common(sweep_cmd, sweep_args, /*config_required=*/true);
    auto* husimi_cmd = app.add_subcommand("husimi", "steady-state Husimi-Q field to CSV");
    add_common(husimi_cmd, husimi_args, /*config_required=*/false);
    auto* steady_cmd = app.add_subcommand("steady", "steady state of the chosen model");
    add_common(steady_cmd, steady_args, /*config_required=*/false);
    auto* evolve_cmd = app.add_subcommand("evolve", "time evolution of the chosen model");
    add_common(evolve_cmd, evolve_args, /*config_required=*/false);
    auto* acceptance_cmd =
        app.add_subcommand("acceptance", "run the acceptance criteria and report");
    add_common(acceptance_cmd, acceptance_args, /*config_required=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        auto load = [](const CommonArgs& args) {
            spinsync::RunConfig config =
                spinsync::load_config_file(args.config_path, args.overrides);
            if (args.jobs > 0) config.jobs = args.jobs;
            return config;
        };
        if (sweep_cmd->parsed()) {
            const auto config = load(sweep_args);
            return run_with_output(sweep_args,
                                   [&](std::ostream& out) { spinsync::run_sweep(config, out); });
        }
        if (husimi_cmd->parsed()) {
            const auto config = load(husimi_args);
            return run_with_output(
                husimi_args, [&](std::ostream& out) { spinsync::run_husimi(config, out); });
        }
        if (steady_cmd->parsed()) {
            const auto config = load(steady_args);
            return run_with_output(
                steady_args, [&](std::ostream& out) { spinsync::run_steady(config, out); });
        }
        if (evolve_cmd->parsed()) {
            const auto config = load(evolve_args);
            return run_with_output(
                evolve_args, [&](std::ostream& out) { spinsync::run_evolve(config, out); });
        }
        if (acceptance_cmd->parsed()) {
            const auto config = load(acceptance_args);
            int failures = 0;
            const int io_status = run_with_output(acceptance_args, [&](std::ostream& out) {
                failures = spinsync::run_acceptance(out, config.constants);
            });
            if (io_status != 0) return io_status;
            return failures == 0 ? 0 : 1;
        }
    } catch (const spinsync::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
