#include "duckswarm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace duckswarm {

SummaryStats summarize(std::span<const double> run_fitnesses, std::span<const double> run_times) {
    if (run_fitnesses.empty()) {
        throw std::invalid_argument("summarize: no runs");
    }
    if (run_fitnesses.size() != run_times.size()) {
        throw std::invalid_argument("summarize: fitness and time counts differ");
    }
    const auto m = static_cast<double>(run_fitnesses.size());
    SummaryStats s;
    s.m = run_fitnesses.size();
    s.best = *std::min_element(run_fitnesses.begin(), run_fitnesses.end());
    s.worst = *std::max_element(run_fitnesses.begin(), run_fitnesses.end());
    s.mean = std::accumulate(run_fitnesses.begin(), run_fitnesses.end(), 0.0) / m;
    double ss = 0.0;
    for (double f : run_fitnesses) {
        ss += (f - s.mean) * (f - s.mean);
    }
    s.std = std::sqrt(ss / m);
    s.mean_time_seconds = std::accumulate(run_times.begin(), run_times.end(), 0.0) / m;
    return s;
}

std::vector<double> midranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return values[l] < values[r]; });
    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && values[order[j]] == values[order[i]]) {
            ++j;
        }
        // Positions i..j-1 hold ranks i+1..j.
        const double rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j;
    }
    return ranks;
}

namespace {

double normal_two_sided(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

// Two-sided exact p-value of the rank sum of `n` items drawn from `pooled`
// ranks. Ranks are doubled so midranks become integers.
double exact_rank_sum_p(std::span<const double> pooled_ranks, std::size_t n, double observed) {
    std::vector<long> doubled(pooled_ranks.size());
    std::transform(pooled_ranks.begin(), pooled_ranks.end(), doubled.begin(),
                   [](double r) { return std::lround(2.0 * r); });
    const long max_sum = std::accumulate(doubled.begin(), doubled.end(), 0L);
    const long target = std::lround(2.0 * observed);

    // ways[k][s]: number of k-subsets of the processed items with doubled sum s.
    std::vector<std::vector<double>> ways(n + 1, std::vector<double>(max_sum + 1, 0.0));
    ways[0][0] = 1.0;
    std::size_t seen = 0;
    for (long r : doubled) {
        ++seen;
        for (std::size_t k = std::min(n, seen); k >= 1; --k) {
            auto& dst = ways[k];
            const auto& src = ways[k - 1];
            for (long s = max_sum; s >= r; --s) {
                dst[s] += src[s - r];
            }
        }
    }

    const auto& dist = ways[n];
    const double total = std::accumulate(dist.begin(), dist.end(), 0.0);
    double lower = 0.0;
    double upper = 0.0;
    for (long s = 0; s <= max_sum; ++s) {
        if (s <= target) {
            lower += dist[s];
        }
        if (s >= target) {
            upper += dist[s];
        }
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / total);
}

}  // namespace

WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b,
                                 WilcoxonMethod method) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("wilcoxon_rank_sum: empty sample");
    }
    WilcoxonResult result;
    // Same multiset of values (which includes the all-equal case): the rank
    // sum sits exactly at its expectation.
    std::vector<double> sa(a.begin(), a.end());
    std::vector<double> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa == sb) {
        result.identical = true;
        return result;
    }

    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);

    const auto n = static_cast<double>(a.size());
    const auto m = static_cast<double>(b.size());
    const double total = n + m;
    const double rank_sum = std::accumulate(ranks.begin(), ranks.begin() + a.size(), 0.0);

    // Tie term sum(t^3 - t) over groups of equal values.
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        const auto t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    const double expected = n * (total + 1.0) / 2.0;
    const double variance =
        n * m / 12.0 * ((total + 1.0) - tie_term / (total * (total - 1.0)));
    const double centered = rank_sum - expected;
    const double correction = centered > 0.0 ? 0.5 : (centered < 0.0 ? -0.5 : 0.0);
    result.z_value = (centered - correction) / std::sqrt(variance);

    const bool use_exact =
        method == WilcoxonMethod::exact ||
        (method == WilcoxonMethod::automatic && a.size() * b.size() <= 64);
    if (use_exact) {
        result.exact = true;
        result.p_value = exact_rank_sum_p(ranks, a.size(), rank_sum);
    } else {
        result.p_value = normal_two_sided(result.z_value);
    }
    result.h = result.p_value < 0.05 ? 1 : 0;
    return result;
}

FriedmanTable friedman(const ResultTensor& results) {
    if (results.empty()) {
        throw std::invalid_argument("friedman: no functions");
    }
    const std::size_t k = results.front().size();
    if (k < 2) {
        throw std::invalid_argument("friedman: need at least two algorithms");
    }
    const std::size_t runs = results.front().front().size();
    if (runs == 0) {
        throw std::invalid_argument("friedman: no runs");
    }
    for (const auto& fn : results) {
        if (fn.size() != k) {
            throw std::invalid_argument("friedman: ragged algorithm dimension");
        }
        for (const auto& alg : fn) {
            if (alg.size() != runs) {
                throw std::invalid_argument("friedman: unequal run counts");
            }
        }
    }

    FriedmanTable table;
    table.totals.assign(k, 0.0);
    std::vector<double> column(k);
    for (const auto& fn : results) {
        std::vector<double> mean_rank(k, 0.0);
        for (std::size_t r = 0; r < runs; ++r) {
            for (std::size_t a = 0; a < k; ++a) {
                column[a] = fn[a][r];
            }
            const auto ranks = midranks(column);
            for (std::size_t a = 0; a < k; ++a) {
                mean_rank[a] += ranks[a];
            }
        }
        for (std::size_t a = 0; a < k; ++a) {
            mean_rank[a] /= static_cast<double>(runs);
            table.totals[a] += mean_rank[a];
        }
        table.per_function_mean_ranks.push_back(std::move(mean_rank));
    }

    table.averages.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        table.averages[a] = table.totals[a] / static_cast<double>(results.size());
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return table.averages[l] < table.averages[r];
    });
    table.final_rank.resize(k);
    for (std::size_t pos = 0; pos < k; ++pos) {
        table.final_rank[order[pos]] = static_cast<int>(pos + 1);
    }
    return table;
}

double diversity(std::span<const Vector> positions) {
    if (positions.empty()) {
        throw std::invalid_argument("diversity: empty swarm");
    }
    const std::size_t dim = positions.front().size();
    const auto n = static_cast<double>(positions.size());
    Vector centroid(dim, 0.0);
    for (const auto& x : positions) {
        for (std::size_t j = 0; j < dim; ++j) {
            centroid[j] += x[j];
        }
    }
    for (double& c : centroid) {
        c /= n;
    }
    double total = 0.0;
    for (const auto& x : positions) {
        double sq = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
            sq += (x[j] - centroid[j]) * (x[j] - centroid[j]);
        }
        total += std::sqrt(sq);
    }
    return total / n;
}

ExplorationSplit xpl_xpt(double div_t, double div_max) {
    if (!(div_max > 0.0)) {
        return {0.0, 0.0, true};
    }
    return {100.0 * div_t / div_max, 100.0 * std::abs(div_t - div_max) / div_max, false};
}

DiversityTrace diversity_trace(std::span<const double> div) {
    DiversityTrace trace;
    trace.div.assign(div.begin(), div.end());
    double running_max = 0.0;
    for (double d : div) {
        running_max = std::max(running_max, d);
        const auto split = xpl_xpt(d, running_max);
        trace.exploration_pct.push_back(split.exploration_pct);
        trace.exploitation_pct.push_back(split.exploitation_pct);
    }
    return trace;
}

double nearest_rank_quantile(std::span<const double> values, double p) {
    if (values.empty()) {
        throw std::invalid_argument("nearest_rank_quantile: empty input");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    const auto rank = static_cast<std::size_t>(std::ceil(p * n));
    return sorted[rank == 0 ? 0 : std::min(rank, sorted.size()) - 1];
}

BoxStats box_stats(std::span<const double> values) {
    return {nearest_rank_quantile(values, 0.0), nearest_rank_quantile(values, 0.25),
            nearest_rank_quantile(values, 0.5), nearest_rank_quantile(values, 0.75),
            nearest_rank_quantile(values, 1.0)};
}

}  // namespace duckswarm
