#pragma once

#include <span>
#include <vector>

#include "duckswarm/core.hpp"

namespace duckswarm {

/// Per-campaign statistics over m independent runs. std uses the 1/m
/// (population) divisor.
struct SummaryStats {
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double std = 0.0;
    double mean_time_seconds = 0.0;
    std::size_t m = 0;
};

/// Throws std::invalid_argument on empty or mismatched input.
SummaryStats summarize(std::span<const double> run_fitnesses, std::span<const double> run_times);

/// 1-based ranks with ties given the average of the ranks they span.
std::vector<double> midranks(std::span<const double> values);

enum class WilcoxonMethod {
    automatic,    // exact when n*m <= 64, normal approximation otherwise
    exact,
    approximate,  // tie-corrected normal with continuity correction
};

struct WilcoxonResult {
    double p_value = 1.0;
    int h = 0;            // 1 when p < 0.05 and the samples are not identical
    double z_value = 0.0; // > 0 when sample a ranks higher than sample b
    bool identical = false;
    bool exact = false;
};

/// Two-sided rank-sum (Mann-Whitney) test of sample a against sample b.
/// When both samples hold the same multiset of values (in particular when
/// every value is equal) the result is flagged identical with p = 1, z = 0.
WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                 WilcoxonMethod method = WilcoxonMethod::automatic);

/// results[function][algorithm][run].
using ResultTensor = std::vector<std::vector<std::vector<double>>>;

struct FriedmanTable {
    std::vector<std::vector<double>> per_function_mean_ranks;  // [function][algorithm]
    std::vector<double> totals;
    std::vector<double> averages;
    std::vector<int> final_rank;  // 1 = smallest average; ties go to the lower index
};

/// Ranks algorithms per function and per run index (midranks on ties),
/// averages the ranks over runs, then sums and averages over functions.
/// Throws std::invalid_argument for fewer than two algorithms, no functions,
/// or unequal run counts.
FriedmanTable friedman(const ResultTensor& results);

/// Mean Euclidean distance of the agents from the population centroid.
double diversity(std::span<const Vector> positions);
inline double diversity(const Swarm& swarm) { return diversity(swarm.positions); }

struct ExplorationSplit {
    double exploration_pct = 0.0;
    double exploitation_pct = 0.0;
    bool degenerate = false;  // div_max == 0: the swarm never dispersed
};

/// exploration = 100*div/div_max, exploitation = 100*|div - div_max|/div_max.
ExplorationSplit xpl_xpt(double div_t, double div_max);

struct DiversityTrace {
    std::vector<double> div;
    std::vector<double> exploration_pct;
    std::vector<double> exploitation_pct;
};

/// Percentages against the running maximum of the trace up to each iteration.
DiversityTrace diversity_trace(std::span<const double> div);

/// Five-number summary using nearest-rank quantiles (rank = ceil(p*n)).
struct BoxStats {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

/// p in [0, 1]; p = 0 gives the minimum. Throws on empty input.
double nearest_rank_quantile(std::span<const double> values, double p);
BoxStats box_stats(std::span<const double> values);

}  // namespace duckswarm
