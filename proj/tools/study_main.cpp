#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "helmls/study.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Helmholtz FOSLS / FEM convergence studies"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run a study from a JSON config");
    std::string config_path;
    std::optional<double> k;
    std::string method;
    std::string out_dir;
    run->add_option("config", config_path, "study config (JSON)")->required();
    run->add_option("--k", k, "wavenumber override");
    run->add_option("--method", method, "fosls, fem or both");
    run->add_option("--out", out_dir, "output directory override");

    app.add_subcommand("list-problems", "list registered problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (app.got_subcommand("list-problems")) {
        for (const auto& p : helmls::problem_registry()) {
            std::cout << p.name << "  (d = " << p.dim << ")  " << p.description << '\n';
        }
        return 0;
    }

    helmls::StudyConfig config;
    try {
        config = helmls::load_config(config_path);
        if (k) {
            config.k = *k;
        }
        if (!method.empty()) {
            config.method = helmls::parse_method(method);
        }
        if (!out_dir.empty()) {
            config.output_dir = out_dir;
        }
        helmls::validate_config(config);
    } catch (const helmls::InvalidArgument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        const helmls::StudyResult result = helmls::run_study(config);
        for (const auto& w : result.warnings) {
            std::cerr << w << '\n';
        }
        helmls::write_study_outputs(config, result);
        std::cout << helmls::format_csv(result);
        std::cout << "wrote " << result.rows.size() << " rows to " << config.output_dir << "/results.csv\n";
    } catch (const helmls::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return 3;
    } catch (const helmls::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
