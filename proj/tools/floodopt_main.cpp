#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floodopt/config.hpp"
#include "floodopt/ga.hpp"
#include "floodopt/report.hpp"
#include "floodopt/sa.hpp"

namespace fs = std::filesystem;
using namespace floodopt;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string iso_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buffer;
}

// Wall time and timestamps live here, away from the deterministic report.
void write_meta(const fs::path& out_path, double wall_seconds) {
    char line[160];
    std::snprintf(line, sizeof(line), "{\n  \"created\": \"%s\",\n  \"wall_seconds\": %.6f\n}\n",
                  iso_timestamp().c_str(), wall_seconds);
    fs::path meta = out_path;
    meta += ".meta.json";
    write_file(meta, line);
}

RunConfig config_from_option(const std::string& config_path) {
    if (config_path.empty()) return RunConfig{};
    return load_config(config_path);
}

void print_run_summary(const RunReport& report, double oracle_total) {
    const double gap = 100.0 * (report.best_objective - oracle_total) / oracle_total;
    std::printf("%s seed=%llu best=%.6g oracle=%.6g gap=%.6g%% evaluations=%llu (%.2fs)\n",
                report.engine.c_str(), static_cast<unsigned long long>(report.seed),
                report.best_objective, oracle_total, gap,
                static_cast<unsigned long long>(report.evaluations), report.wall_seconds);
}

struct RunCommandState {
    std::string config_path;
    std::string out_path;
    std::string trace_csv;
    std::string breakdown_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool render = false;
};

void add_run_options(CLI::App* cmd, RunCommandState& state) {
    cmd->add_option("--config", state.config_path, "Config file (JSON); defaults when omitted");
    cmd->add_option("--out", state.out_path, "Report output file")->required();
    cmd->add_option("--seed", state.seed, "Seed override")->each([&](const std::string&) {
        state.seed_given = true;
    });
    cmd->add_option("--trace-csv", state.trace_csv, "Write the best-so-far trace as CSV");
    cmd->add_option("--breakdown", state.breakdown_path,
                    "Write the best design's objective breakdown (JSON)");
    cmd->add_flag("--render", state.render, "Print the best design's trait grids");
}

void finish_run(const RunCommandState& state, const RunConfig& config, const RunReport& report,
                const SiteGrid& grid) {
    write_file(state.out_path, run_report_to_json(report));
    write_meta(state.out_path, report.wall_seconds);
    std::string trace_path = state.trace_csv;
    if (trace_path.empty() && config.output.trace_csv) trace_path = state.out_path + ".trace.csv";
    if (!trace_path.empty()) write_file(trace_path, trace_to_csv(report));
    std::string breakdown_path = state.breakdown_path;
    if (breakdown_path.empty() && config.output.breakdown)
        breakdown_path = state.out_path + ".breakdown.json";
    if (!breakdown_path.empty())
        write_file(breakdown_path,
                   breakdown_to_json(breakdown(report.best, grid, config.objective)));
    if (state.render || config.output.render) std::cout << render_trait_grids(report.best);
    const OracleResult oracle = exact_optimum(grid, config.objective);
    print_run_summary(report, oracle.total);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gridded city flood-vulnerability model: exact oracle, GA and SA minimizers"};
    app.require_subcommand(1);

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive enumeration");
    std::string oracle_config, oracle_out, oracle_breakdown;
    bool oracle_render = false;
    oracle_cmd->add_option("--config", oracle_config, "Config file (JSON); defaults when omitted");
    oracle_cmd->add_option("--out", oracle_out, "Report output file")->required();
    oracle_cmd->add_option("--breakdown", oracle_breakdown,
                           "Write the optimal design's objective breakdown (JSON)");
    oracle_cmd->add_flag("--render", oracle_render, "Print the optimal design's trait grids");

    RunCommandState ga_state, sa_state;
    auto* ga_cmd = app.add_subcommand("ga", "Genetic algorithm run");
    add_run_options(ga_cmd, ga_state);
    auto* sa_cmd = app.add_subcommand("sa", "Simulated annealing run");
    add_run_options(sa_cmd, sa_state);

    auto* compare_cmd = app.add_subcommand("compare", "Oracle + GA + SA over a seed list");
    std::string compare_config, compare_out;
    std::vector<std::uint64_t> compare_seeds;
    compare_cmd->add_option("--config", compare_config, "Config file (JSON); defaults when omitted");
    compare_cmd->add_option("--seeds", compare_seeds, "Comma-separated seeds")
        ->required()
        ->delimiter(',');
    compare_cmd->add_option("--out", compare_out, "Output directory")->required();

    auto* render_cmd = app.add_subcommand("render", "Print a design file as per-trait grids");
    std::string render_design, render_trait;
    bool render_no_legend = false;
    render_cmd->add_option("--design", render_design, "Design file (JSON)")->required();
    render_cmd->add_option("--trait", render_trait, "Render one trait only");
    render_cmd->add_flag("--no-legend", render_no_legend, "Skip the code legends");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*oracle_cmd) {
            const RunConfig config = config_from_option(oracle_config);
            const SiteGrid grid = config.make_grid();
            const auto start = std::chrono::steady_clock::now();
            const OracleResult result = exact_optimum(grid, config.objective);
            const double wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            write_file(oracle_out, oracle_to_json(result));
            write_meta(oracle_out, wall);
            std::string breakdown_path = oracle_breakdown;
            if (breakdown_path.empty() && config.output.breakdown)
                breakdown_path = oracle_out + ".breakdown.json";
            if (!breakdown_path.empty())
                write_file(breakdown_path,
                           breakdown_to_json(breakdown(result.design, grid, config.objective)));
            if (oracle_render || config.output.render)
                std::cout << render_trait_grids(result.design);
            std::printf("oracle total=%.6g over %zu distinct site factors (%.2fs)\n", result.total,
                        result.per_factor.size(), wall);
        } else if (*ga_cmd) {
            const RunConfig config = config_from_option(ga_state.config_path);
            const SiteGrid grid = config.make_grid();
            GaParams params = config.ga;
            if (ga_state.seed_given) params.seed = ga_state.seed;
            finish_run(ga_state, config, run_ga(grid, config.objective, params), grid);
        } else if (*sa_cmd) {
            const RunConfig config = config_from_option(sa_state.config_path);
            const SiteGrid grid = config.make_grid();
            SaParams params = config.sa;
            if (sa_state.seed_given) params.seed = sa_state.seed;
            finish_run(sa_state, config, run_sa(grid, config.objective, params), grid);
        } else if (*compare_cmd) {
            const RunConfig config = config_from_option(compare_config);
            const auto start = std::chrono::steady_clock::now();
            const ComparisonReport report = compare_runs(config, compare_seeds);
            const double wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const fs::path dir(compare_out);
            write_file(dir / "comparison.json", comparison_to_json(report));
            write_file(dir / "oracle.json", oracle_to_json(report.oracle));
            write_file(dir / "ga_best_design.json",
                       design_to_json(report.ga_runs[report.best_ga_index].best));
            write_file(dir / "sa_best_design.json",
                       design_to_json(report.sa_runs[report.best_sa_index].best));
            write_file(dir / "ga_best_render.txt",
                       render_trait_grids(report.ga_runs[report.best_ga_index].best));
            write_file(dir / "sa_best_render.txt",
                       render_trait_grids(report.sa_runs[report.best_sa_index].best));
            for (const RunReport& run : report.ga_runs)
                write_file(dir / ("trace_ga_seed" + std::to_string(run.seed) + ".csv"),
                           trace_to_csv(run));
            for (const RunReport& run : report.sa_runs)
                write_file(dir / ("trace_sa_seed" + std::to_string(run.seed) + ".csv"),
                           trace_to_csv(run));
            write_meta(dir / "comparison.json", wall);
            std::printf("oracle total=%.6g\n", report.oracle.total);
            std::printf("ga  median gap=%.6g%% min=%.6g%% max=%.6g%%\n",
                        report.ga_stats.median_gap_percent, report.ga_stats.min_gap_percent,
                        report.ga_stats.max_gap_percent);
            std::printf("sa  median gap=%.6g%% min=%.6g%% max=%.6g%%\n",
                        report.sa_stats.median_gap_percent, report.sa_stats.min_gap_percent,
                        report.sa_stats.max_gap_percent);
        } else if (*render_cmd) {
            const CityDesign design = load_design(render_design);
            RenderOptions options;
            options.legend = !render_no_legend;
            if (!render_trait.empty()) {
                const auto trait = trait_from_name(render_trait);
                if (!trait)
                    throw ValidationError("unknown trait name: " + render_trait);
                options.only_trait = trait;
            }
            std::cout << render_trait_grids(design, options);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
