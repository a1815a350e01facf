#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "duckswarm/benchmarks.hpp"
#include "duckswarm/constrained.hpp"
#include "duckswarm/core.hpp"
#include "duckswarm/harness.hpp"

using namespace duckswarm;

namespace {

struct Options {
    std::vector<std::string> problems;
    std::vector<std::string> algos;
    std::size_t runs = 30;
    std::size_t agents = 30;
    std::size_t iters = 200;
    std::uint64_t seed = 1;
    std::string out = "results";
    std::size_t dim = 0;
    std::size_t threads = 1;
    bool no_traces = false;
    std::string printed;
    std::vector<std::size_t> agent_grid{30, 50, 80, 100};
    std::vector<std::size_t> iter_grid{200, 500, 1000, 2000};
    std::size_t grid_iters = 500;
    std::size_t grid_agents = 30;
};

std::vector<std::string> all_benchmarks() {
    std::vector<std::string> out;
    for (const auto& info : benchmark_table()) {
        out.emplace_back(info.code);
    }
    return out;
}

std::vector<AlgorithmId> parse_algorithms(const std::vector<std::string>& names) {
    std::vector<AlgorithmId> out;
    for (const auto& n : names) {
        const auto a = parse_algorithm(n);
        if (!a) {
            throw ConfigError(fmt::format("unknown algorithm id '{}'", n));
        }
        out.push_back(*a);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Duck swarm optimization experiment runner"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; flags override it");

    Options o;
    auto* problems = app.add_option("--problems", o.problems, "Problem ids (F1..F18, tbtp, sop, tsd, wbd, pvd, srd)")
                         ->delimiter(',');
    auto* algos = app.add_option("--algos", o.algos, "Algorithms (dsa, pso, gwo, sca)")->delimiter(',');
    app.add_option("--runs", o.runs, "Independent runs per cell")->capture_default_str();
    app.add_option("--agents", o.agents, "Population size")->capture_default_str();
    auto* iters = app.add_option("--iters", o.iters, "Iterations per run (engineer: 500)")->capture_default_str();
    app.add_option("--seed", o.seed, "Root seed; run r uses seed + r")->capture_default_str();
    app.add_option("--out", o.out, "Output directory")->capture_default_str();
    app.add_option("--dim", o.dim, "Dimension for F1..F14 (default 30)");
    app.add_option("--threads", o.threads, "Worker threads")->capture_default_str();
    app.add_flag("--no-traces", o.no_traces, "Skip per-run trace files");
    app.add_option("--printed", o.printed, "Printed-results CSV for compare");
    app.add_option("--agent-grid", o.agent_grid, "Sensitivity population sizes")->delimiter(',');
    app.add_option("--iter-grid", o.iter_grid, "Sensitivity iteration counts")->delimiter(',');
    app.add_option("--grid-iters", o.grid_iters, "Iterations for the population sweep")->capture_default_str();
    app.add_option("--grid-agents", o.grid_agents, "Population for the iteration sweep")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Run a seeded campaign and write results, summary and traces");
    auto* compare = app.add_subcommand("compare", "Wilcoxon and Friedman tables against dsa");
    auto* engineer = app.add_subcommand("engineer", "Constrained engineering design problems");
    auto* sensitivity = app.add_subcommand("sensitivity", "Population and iteration sweeps");
    auto* boxplot = app.add_subcommand("boxplot", "Quartiles and raw values per problem and algorithm");
    for (auto* sub : {bench, compare, engineer, sensitivity, boxplot}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ExperimentSpec spec;
        spec.runs = o.runs;
        spec.n_agents = o.agents;
        spec.max_iter = o.iters;
        spec.root_seed = o.seed;
        spec.output_dir = o.out;
        spec.threads = o.threads;
        spec.write_traces = !o.no_traces;
        if (o.dim != 0) {
            spec.dim = o.dim;
        }
        const bool have_problems = problems->count() > 0 || !o.problems.empty();
        const bool have_algos = algos->count() > 0 || !o.algos.empty();
        const std::vector<std::string> baseline_set{"dsa", "pso", "gwo", "sca"};

        if (*bench) {
            spec.problems = have_problems ? o.problems : all_benchmarks();
            spec.algorithms = parse_algorithms(have_algos ? o.algos : baseline_set);
            const auto rows = cmd_bench(spec);
            fmt::print("bench: {} runs written to {}\n", rows.size(), spec.output_dir.string());
        } else if (*compare) {
            spec.problems = have_problems ? o.problems : all_benchmarks();
            spec.algorithms = parse_algorithms(have_algos ? o.algos : baseline_set);
            const std::filesystem::path printed =
                o.printed.empty() ? default_printed_results() : std::filesystem::path(o.printed);
            std::optional<std::filesystem::path> printed_opt;
            if (std::filesystem::exists(printed)) {
                printed_opt = printed;
            } else if (!o.printed.empty()) {
                throw ConfigError(fmt::format("printed results file '{}' not found", o.printed));
            }
            const auto out = cmd_compare(spec, printed_opt);
            fmt::print("compare: {} wilcoxon rows, {} friedman functions\n", out.wilcoxon.size(),
                       out.problems.size());
        } else if (*engineer) {
            std::vector<std::string> ids(engineering_ids().begin(), engineering_ids().end());
            spec.problems = have_problems ? o.problems : ids;
            spec.algorithms = parse_algorithms(have_algos ? o.algos : std::vector<std::string>{"dsa"});
            if (iters->count() == 0) {
                spec.max_iter = 500;
            }
            for (const auto& s : cmd_engineer(spec)) {
                fmt::print("{} {}: best {:.10g} objective {:.10g} max violation {:.3e}\n", s.problem,
                           to_string(s.algorithm), s.stats.best, s.best_objective,
                           s.best_max_violation);
            }
        } else if (*sensitivity) {
            spec.problems = have_problems ? o.problems : std::vector<std::string>{"F1", "F2", "F9", "F10"};
            spec.algorithms = parse_algorithms(have_algos ? o.algos : std::vector<std::string>{"dsa"});
            SensitivityGrid grid{o.agent_grid, o.grid_iters, o.iter_grid, o.grid_agents};
            const auto out = cmd_sensitivity(spec, grid);
            fmt::print("sensitivity: {} + {} cells written to {}\n", out.by_agents.size(),
                       out.by_iterations.size(), spec.output_dir.string());
        } else if (*boxplot) {
            spec.problems = have_problems ? o.problems : all_benchmarks();
            spec.algorithms = parse_algorithms(have_algos ? o.algos : baseline_set);
            const auto out = cmd_boxplot(spec);
            fmt::print("boxplot: {} rows written to {}\n", out.size(), spec.output_dir.string());
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
