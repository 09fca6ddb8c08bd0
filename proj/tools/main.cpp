#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riesz/suite.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw riesz::IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw riesz::IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw riesz::IoError("failed writing " + path);
}

int run_verify(const riesz::SuiteConfig& cfg, const std::string& json_out) {
    riesz::SuiteReport report = riesz::run_suite(cfg);
    for (const auto& p : report.properties) {
        std::cout << "  " << std::left << std::setw(34) << p.name << p.passes
                  << "/" << p.trials << "\n";
        for (const auto& f : p.failures) {
            std::cout << "      trial " << f.trial << ": " << f.detail << "\n";
        }
    }
    std::cout << report.properties.size() << " properties, "
              << report.config.trials << " trials each, "
              << report.total_failures() << " failures ("
              << std::fixed << std::setprecision(2) << report.wall_seconds
              << " s)\n";
    if (!json_out.empty()) {
        write_file(json_out, riesz::report_to_json(report));
    }
    return report.all_passed() ? 0 : 1;
}

int run_explain(const std::string& name) {
    if (name.empty()) {
        for (const auto& info : riesz::property_catalog()) {
            std::cout << std::left << std::setw(34) << info.name
                      << info.description << "\n";
        }
        return 0;
    }
    const riesz::PropertyInfo* info = riesz::find_property(name);
    if (!info) {
        std::cerr << "unknown property '" << name << "'; known properties:\n";
        for (const auto& p : riesz::property_catalog()) {
            std::cerr << "  " << p.name << "\n";
        }
        return 2;
    }
    std::cout << info->name << "\n  formula:  " << info->formula
              << "\n  checks:   " << info->description << "\n";
    return 0;
}

int run_curves(const std::string& spec_path, double t_min, double t_max,
               int points, const std::string& out_path) {
    if (points < 1) throw riesz::ConfigInvalid("points must be >= 1");
    if (!(t_min <= t_max)) throw riesz::ConfigInvalid("need t-min <= t-max");
    riesz::BernoulliProcess proc =
        riesz::process_from_spec_json(read_file(spec_path));
    std::vector<double> grid;
    grid.reserve(points);
    for (int j = 0; j < points; ++j) {
        grid.push_back(points == 1
                           ? t_min
                           : t_min + j * (t_max - t_min) / (points - 1));
    }
    std::ostringstream csv;
    riesz::emit_curves(proc, grid, csv);
    write_file(out_path, csv.str());
    std::cout << "wrote " << out_path << " (" << points << " rows)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for lattice concentration bounds"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand(
        "verify", "run the randomized verification suite");
    std::uint64_t seed = 0;
    std::int64_t trials = 100;
    std::string config_path, json_out;
    auto* seed_opt = verify->add_option("--seed", seed, "suite seed");
    auto* trials_opt =
        verify->add_option("--trials", trials, "trials per property");
    verify->add_option("--config", config_path, "config file (json)");
    verify->add_option("--json", json_out, "write the report as json");

    auto* curves = app.add_subcommand(
        "curves", "emit tail-vs-bound curve data as csv");
    std::string spec_path, out_path;
    double t_min = 0.0, t_max = 0.0;
    int points = 0;
    curves->add_option("--spec", spec_path, "process description (json)")
        ->required();
    curves->add_option("--t-min", t_min, "first t value")->required();
    curves->add_option("--t-max", t_max, "last t value")->required();
    curves->add_option("--points", points, "grid size")->required();
    curves->add_option("--out", out_path, "output csv path")->required();

    auto* explain = app.add_subcommand(
        "explain", "describe a verification property");
    std::string prop_name;
    explain->add_option("property", prop_name, "property id (omit to list)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            riesz::SuiteConfig cfg;
            if (!config_path.empty()) {
                cfg = riesz::config_from_json_text(read_file(config_path));
            }
            if (seed_opt->count() > 0) cfg.seed = seed;
            if (trials_opt->count() > 0) cfg.trials = trials;
            cfg.validate();
            std::cout << "seed " << cfg.seed << ", " << cfg.trials
                      << " trials per property\n";
            return run_verify(cfg, json_out);
        }
        if (curves->parsed()) {
            return run_curves(spec_path, t_min, t_max, points, out_path);
        }
        if (explain->parsed()) {
            return run_explain(prop_name);
        }
    } catch (const riesz::ConfigInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const riesz::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const riesz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
