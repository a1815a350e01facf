#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "duckswarm/core.hpp"
#include "duckswarm/metrics.hpp"

namespace duckswarm {

inline constexpr std::string_view kToolVersion = "duckswarm 0.1.0";

struct ExperimentSpec {
    std::vector<std::string> problems;  // "F1".."F18" or an engineering id
    std::vector<AlgorithmId> algorithms{AlgorithmId::dsa};
    std::size_t runs = 30;
    std::size_t n_agents = 30;
    std::size_t max_iter = 200;
    std::uint64_t root_seed = 1;
    std::filesystem::path output_dir = "results";
    std::optional<std::size_t> dim;  // applied to F1..F14 only; others keep their size
    std::size_t threads = 1;
    bool write_traces = true;

    /// Throws ConfigError for empty lists, zero counts, too few agents, or
    /// unknown problem ids.
    void validate() const;
};

/// Resolves a benchmark code or engineering id. Engineering problems are
/// returned in penalized form and dim is ignored for them and for the
/// fixed-dimension benchmarks. Throws ConfigError naming an unknown id.
Problem resolve_problem(std::string_view id, std::optional<std::size_t> dim = std::nullopt);

struct ResultRow {
    std::string problem;
    AlgorithmId algorithm = AlgorithmId::dsa;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    double elapsed_seconds = 0.0;
};

struct SummaryRow {
    std::string problem;
    AlgorithmId algorithm = AlgorithmId::dsa;
    SummaryStats stats;
};

struct WilcoxonRow {
    std::string problem;
    AlgorithmId algorithm = AlgorithmId::dsa;  // compared against dsa
    WilcoxonResult result;
};

struct CompareOutput {
    std::vector<WilcoxonRow> wilcoxon;
    std::vector<std::string> problems;      // friedman row order
    std::vector<AlgorithmId> algorithms;    // friedman column order
    FriedmanTable friedman;
};

struct EngineerSummary {
    std::string problem;
    AlgorithmId algorithm = AlgorithmId::dsa;
    SummaryStats stats;  // over penalized best fitness
    Vector best_position;
    double best_objective = 0.0;
    Vector best_constraints;
    double best_max_violation = 0.0;
};

struct SensitivityCell {
    std::string problem;
    AlgorithmId algorithm = AlgorithmId::dsa;
    std::size_t n_agents = 0;
    std::size_t max_iter = 0;
    double mean = 0.0;
    double std = 0.0;
};

struct SensitivityOutput {
    std::vector<SensitivityCell> by_agents;
    std::vector<SensitivityCell> by_iterations;
};

struct SensitivityGrid {
    std::vector<std::size_t> agent_counts{30, 50, 80, 100};
    std::size_t iterations_for_agent_sweep = 500;
    std::vector<std::size_t> iteration_counts{200, 500, 1000, 2000};
    std::size_t agents_for_iteration_sweep = 30;
};

struct BoxRow {
    std::string problem;
    AlgorithmId algorithm = AlgorithmId::dsa;
    BoxStats box;
    std::vector<double> values;
};

/// Runs every (problem, algorithm, run) cell with seed root_seed + run.
/// Cells may run on spec.threads workers; rows come back in
/// problem-major, algorithm, run order regardless of scheduling. Writes a
/// trace file per cell when spec.write_traces is set.
std::vector<ResultRow> run_campaign(const ExperimentSpec& spec);

std::vector<SummaryRow> summarize_results(const std::vector<ResultRow>& rows);

/// results.csv holds no timing so reruns are byte-identical; elapsed
/// seconds go to timing.csv.
void write_results(const std::filesystem::path& dir, const std::vector<ResultRow>& rows);
/// Reads results.csv and, when present, timing.csv from dir.
std::vector<ResultRow> read_results(const std::filesystem::path& dir);
void write_summary(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);
void write_manifest(const ExperimentSpec& spec, std::string_view command);

std::vector<ResultRow> cmd_bench(const ExperimentSpec& spec);

/// Uses <out>/results.csv when it exists, otherwise runs cmd_bench first.
/// Requires dsa among the algorithms for the Wilcoxon table. When
/// printed_path is given, also writes printed_comparison.csv from it.
CompareOutput cmd_compare(const ExperimentSpec& spec,
                          const std::optional<std::filesystem::path>& printed_path = {});

std::vector<EngineerSummary> cmd_engineer(const ExperimentSpec& spec);

SensitivityOutput cmd_sensitivity(const ExperimentSpec& spec, const SensitivityGrid& grid);

std::vector<BoxRow> cmd_boxplot(const ExperimentSpec& spec);

/// Default location of the printed-results data file.
std::filesystem::path default_printed_results();

}  // namespace duckswarm
