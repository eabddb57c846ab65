#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "homindex/experiment.hpp"

namespace {

// exit codes: 0 all pass, 1 check failure, 2 configuration/contract error
constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

void write_artifacts(const homindex::RunReport& report, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const std::string base = out_dir + "/" + report.name;
    std::ofstream csv(base + ".csv");
    csv << homindex::render_csv(report);
    std::ofstream js(base + ".json");
    js << homindex::render_json(report) << "\n";
}

void print_summary(const homindex::RunReport& report) {
    std::size_t passed = 0;
    for (const auto& r : report.records) passed += r.pass ? 1 : 0;
    std::cout << (report.overall_pass ? "PASS " : "FAIL ") << report.name << " ["
              << report.kind << "] " << passed << "/" << report.records.size()
              << " checks, " << report.wall_ms << " ms\n";
    if (!report.overall_pass) {
        for (const auto& r : report.records)
            if (!r.pass)
                std::cout << "  failed: " << r.check_id << " value=" << r.value
                          << " tolerance=" << r.tolerance << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological index experiment runner"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "run experiments from a JSON config");
    std::string config_path;
    std::string out_dir = ".";
    int jobs = 1;
    run_cmd->add_option("config", config_path, "experiment config (object or array)")
        ->required();
    run_cmd->add_option("--out", out_dir, "artifact directory");
    run_cmd->add_option("--jobs", jobs, "experiments run in parallel")
        ->check(CLI::PositiveNumber);

    auto* list_cmd = app.add_subcommand("list", "print the rule registry");

    auto* verify_cmd = app.add_subcommand("verify-symbolic", "run the exact cycle suite");
    unsigned n_max = 4;
    verify_cmd->add_option("--n-max", n_max, "largest degree to verify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfigError;
    }

    try {
        if (list_cmd->parsed()) {
            std::cout << homindex::registry_catalog().dump(2) << "\n";
            return kExitPass;
        }

        if (verify_cmd->parsed()) {
            homindex::ExperimentConfig cfg;
            cfg.name = "verify-symbolic";
            cfg.kind = "verify-symbolic";
            cfg.seed = 1;
            cfg.parameters["n_max"] = n_max;
            homindex::RunReport rep = homindex::run_experiment(cfg);
            std::cout << homindex::render_csv(rep);
            print_summary(rep);
            return rep.overall_pass ? kExitPass : kExitCheckFailure;
        }

        auto configs = homindex::parse_config_file(config_path);
        std::vector<homindex::RunReport> reports(configs.size());
        if (jobs <= 1 || configs.size() <= 1) {
            for (std::size_t i = 0; i < configs.size(); ++i)
                reports[i] = homindex::run_experiment(configs[i]);
        } else {
            std::vector<std::future<homindex::RunReport>> futures;
            futures.reserve(configs.size());
            for (const auto& cfg : configs)
                futures.push_back(std::async(std::launch::async,
                                             [&cfg] { return homindex::run_experiment(cfg); }));
            for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();
        }

        bool all_pass = true;
        for (const auto& rep : reports) {
            write_artifacts(rep, out_dir);
            print_summary(rep);
            all_pass = all_pass && rep.overall_pass;
        }
        return all_pass ? kExitPass : kExitCheckFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
