#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "firman/experiment.hpp"

namespace {

// Exit codes: 0 success, 1 validation failure, 2 config or I/O error.
constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kConfigOrIoError = 2;

void print_record(const firman::TrialRecord& r) {
    std::cout << "case:                 " << r.case_id << "\n"
              << "scenario:             " << r.scenario_id << "\n"
              << "seed:                 " << r.seed << "\n"
              << "agents:               " << r.n_agents << " (" << r.n_minority << " minority)\n"
              << "dyads:                " << r.total_dyads() << " (" << r.homo_dyads << " homo, "
              << r.hetero_dyads << " hetero, " << r.hetero_pct() << "% hetero)\n"
              << "mean similarity:      " << r.mean_ego_alter_similarity << "%\n"
              << "  majority egos:      " << r.mean_similarity_majority << "%\n"
              << "  minority egos:      " << r.mean_similarity_minority << "%\n"
              << "satisfied agents:     " << r.pct_satisfied << "%\n"
              << "isolates:             " << r.n_isolates << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"firman: friendship-formation simulator over a social identity space"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run the configured scenario sweep; writes "
                                              "trials.csv, summary.csv, ratios.csv");
    std::string config_path;
    std::string preset = "paper";
    std::string out_dir;
    std::uint64_t base_seed = 0;
    int workers = -1;
    bool export_edges = false;
    sweep->add_option("--config", config_path, "JSON config file (overrides the preset)");
    sweep->add_option("--preset", preset, "Built-in config preset")
        ->check(CLI::IsMember({"paper"}));
    auto* seed_opt = sweep->add_option("--seed", base_seed, "Base seed override");
    auto* out_opt = sweep->add_option("--out", out_dir, "Output directory override");
    sweep->add_option("--workers", workers, "Worker thread count (0 = hardware)");
    sweep->add_flag("--export-edges", export_edges, "Write one edge list per trial");

    // single
    auto* single = app.add_subcommand("single", "Run one simulation and print its metrics");
    int case_id = 1;
    std::string scenario_id;
    std::uint64_t seed = 0;
    bool export_files = false;
    std::string single_out = ".";
    single->add_option("--case", case_id, "Case id from the config")->required();
    single->add_option("--scenario", scenario_id, "Scenario id (offline or facebook)")->required();
    single->add_option("--seed", seed, "Simulation seed")->required();
    single->add_flag("--export-edges", export_files, "Write agents_<tag>.csv and edges_<tag>.csv");
    single->add_option("--out", single_out, "Directory for exported files");
    std::string single_config;
    single->add_option("--config", single_config, "JSON config file (defaults to the paper preset)");

    // validate
    auto* validate = app.add_subcommand("validate", "Audit an exported network against all "
                                                    "invariants and the equilibrium oracle");
    std::string edges_path, agents_path;
    validate->add_option("--edges", edges_path, "Edge list CSV")->required();
    validate->add_option("--agents", agents_path, "Agents CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigOrIoError;
    }

    try {
        if (sweep->parsed()) {
            firman::ExperimentConfig config = config_path.empty()
                                                  ? firman::ExperimentConfig::paper_preset()
                                                  : firman::ExperimentConfig::from_json_file(config_path);
            if (*seed_opt) config.base_seed = base_seed;
            if (*out_opt) config.out_dir = out_dir;
            if (workers >= 0) config.workers = workers;
            if (export_edges) config.export_edges = true;
            const firman::SweepResult result = firman::run_sweep(config);
            std::cout << "wrote " << result.trials.size() << " trial rows, "
                      << result.summaries.size() << " summary rows, " << result.ratios.size()
                      << " ratio rows to " << config.out_dir << "\n";
            return kOk;
        }
        if (single->parsed()) {
            firman::ExperimentConfig config = single_config.empty()
                                                  ? firman::ExperimentConfig::paper_preset()
                                                  : firman::ExperimentConfig::from_json_file(single_config);
            config.out_dir = single_out;
            const firman::TrialResult result =
                firman::run_single(config, case_id, scenario_id, seed, export_files);
            print_record(result.record);
            return kOk;
        }
        if (validate->parsed()) {
            const firman::ValidationReport report = firman::validate_files(agents_path, edges_path);
            if (report.ok) {
                std::cout << "ok: all invariants hold and the network is at equilibrium\n";
                return kOk;
            }
            for (const std::string& v : report.violations) std::cerr << "violation: " << v << "\n";
            return kValidationFailure;
        }
    } catch (const firman::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigOrIoError;
    } catch (const firman::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kConfigOrIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigOrIoError;
    }
    return kConfigOrIoError;
}
