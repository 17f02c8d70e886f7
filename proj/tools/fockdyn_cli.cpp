// Scenario runner: fockdyn <config.yaml> [--out PREFIX] [--threads N] [--check]

#include <exception>
#include <iostream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "fockdyn/errors.hpp"
#include "fockdyn/scenario/check.hpp"
#include "fockdyn/scenario/config.hpp"
#include "fockdyn/scenario/runner.hpp"

namespace sc = fockdyn::scenario;

namespace {

int run(const std::string& config_path, const std::string& out_prefix, bool check) {
    const auto cfg = sc::load_config(config_path);
    if (check) {
        bool all = true;
        for (const auto& r : sc::run_checks(cfg)) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
            all = all && r.passed;
        }
        return all ? sc::exit_ok : sc::exit_contract;
    }
    const std::string prefix = !out_prefix.empty() ? out_prefix : cfg.output.value_or("");
    if (prefix.empty()) throw sc::ConfigError(config_path + ": no output prefix (set 'output' or pass --out)");
    const auto result = sc::run_scenario(cfg);
    sc::write_outputs(prefix, result.files);
    std::cout << result.summary;
    for (const auto& f : result.files) std::cout << "wrote " << prefix << f.suffix << "\n";
    return sc::exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock-space dynamics workbench: run a scenario config and write CSV outputs"};
    std::string config_path;
    std::string out_prefix;
    int threads = 0;
    bool check = false;
    app.add_option("config", config_path, "scenario config file (YAML)")->required();
    app.add_option("--out", out_prefix, "output path prefix (overrides 'output' in the config)");
    app.add_option("--threads", threads, "OpenMP threads (default: runtime default)")->check(CLI::PositiveNumber);
    app.add_flag("--check", check, "run the invariant suite on the configured model and exit");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sc::exit_config;
    }
    if (threads > 0) omp_set_num_threads(threads);

    try {
        return run(config_path, out_prefix, check);
    } catch (const sc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return sc::exit_config;
    } catch (const fockdyn::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return sc::exit_config;
    } catch (const fockdyn::DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << "\n";
        return sc::exit_config;
    } catch (const fockdyn::SizeLimitError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return sc::exit_resource;
    } catch (const fockdyn::ContractViolation& e) {
        std::cerr << "numerical contract violated: " << e.what() << "\n";
        return sc::exit_contract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sc::exit_config;
    }
}
