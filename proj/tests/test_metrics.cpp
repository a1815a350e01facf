#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "duckswarm/metrics.hpp"

using namespace duckswarm;

namespace {

// Two-sided exact rank-sum p-value by enumerating every way to pick which
// pooled positions belong to sample a.
double brute_force_p(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> pooled = a;
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::size_t total = pooled.size();
    const std::size_t n = a.size();
    // Midranks by counting.
    std::vector<double> rank(total);
    for (std::size_t i = 0; i < total; ++i) {
        double less = 0, equal = 0;
        for (double v : pooled) {
            less += v < pooled[i];
            equal += v == pooled[i];
        }
        rank[i] = less + (equal + 1.0) / 2.0;
    }
    double observed = 0.0;
    for (std::size_t i = 0; i < n; ++i) observed += rank[i];

    std::vector<bool> pick(total, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
    double le = 0, ge = 0, count = 0;
    // prev_permutation over a sorted-descending mask walks every n-subset.
    do {
        double s = 0;
        for (std::size_t i = 0; i < total; ++i) {
            if (pick[i]) s += rank[i];
        }
        le += s <= observed + 1e-9;
        ge += s >= observed - 1e-9;
        ++count;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return std::min(1.0, 2.0 * std::min(le, ge) / count);
}

double brute_std(const std::vector<double>& v) {
    long double mean = 0;
    for (double x : v) mean += x;
    mean /= v.size();
    long double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return static_cast<double>(std::sqrt(ss / v.size()));
}

}  // namespace

TEST_CASE("summarize") {
    const std::vector<double> one{5.0};
    const auto s1 = summarize(one, one);
    CHECK(s1.best == 5.0);
    CHECK(s1.mean == 5.0);
    CHECK(s1.std == 0.0);

    const std::vector<double> three{1.0, 2.0, 3.0};
    const auto s3 = summarize(three, three);
    CHECK(s3.mean == 2.0);
    CHECK(s3.std == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(s3.worst == 3.0);
    CHECK(s3.mean_time_seconds == 2.0);
    CHECK(s3.m == 3);

    const std::vector<double> zeros(4, 0.0);
    CHECK(summarize(zeros, zeros).std == 0.0);
    CHECK_THROWS_AS(summarize(std::vector<double>{}, std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(summarize(three, one), std::invalid_argument);
}

TEST_CASE("summarize std matches brute force") {
    Rng rng(1);
    for (int k = 0; k < 100; ++k) {
        std::vector<double> v(1 + rng.index(40));
        const double scale = std::pow(10.0, rng.uniform(-5.0, 5.0));
        for (double& x : v) x = scale * rng.uniform(-1.0, 1.0);
        const auto s = summarize(v, v);
        CHECK(std::abs(s.std - brute_std(v)) <= 1e-12 * std::max(1.0, brute_std(v)));
        CHECK(s.best <= s.mean);
    }
}

TEST_CASE("midranks") {
    CHECK(midranks(std::vector<double>{3.0, 1.0, 2.0}) == std::vector<double>{3.0, 1.0, 2.0});
    CHECK(midranks(std::vector<double>{1.0, 1.0, 2.0}) == std::vector<double>{1.5, 1.5, 3.0});
    CHECK(midranks(std::vector<double>{4.0, 4.0, 4.0}) == std::vector<double>{2.0, 2.0, 2.0});
}

TEST_CASE("wilcoxon small cases") {
    const auto same = wilcoxon_rank_sum(std::vector<double>{7, 7, 7}, std::vector<double>{7, 7, 7});
    CHECK(same.identical);
    CHECK(same.h == 0);
    CHECK(same.p_value == 1.0);
    CHECK(same.z_value == 0.0);

    const auto sep = wilcoxon_rank_sum(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6});
    CHECK(sep.exact);
    CHECK(sep.p_value == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(sep.h == 0);
    CHECK(sep.z_value < 0.0);
    CHECK_THROWS_AS(wilcoxon_rank_sum(std::vector<double>{}, std::vector<double>{1}),
                    std::invalid_argument);
}

TEST_CASE("wilcoxon exact path matches enumeration") {
    Rng rng(2);
    for (int k = 0; k < 1000; ++k) {
        const std::size_t n = 1 + rng.index(8);
        const std::size_t m = 1 + rng.index(8);
        std::vector<double> a(n), b(m);
        const std::size_t spread = 2 + rng.index(12);  // small ranges force ties
        for (double& v : a) v = static_cast<double>(rng.index(spread));
        for (double& v : b) v = static_cast<double>(rng.index(spread));
        const auto r = wilcoxon_rank_sum(a, b, WilcoxonMethod::exact);
        if (r.identical) {
            CHECK(r.h == 0);
            continue;
        }
        CAPTURE(n);
        CAPTURE(m);
        CHECK(std::abs(r.p_value - brute_force_p(a, b)) <= 1e-10);
        CHECK(r.h == (r.p_value < 0.05 ? 1 : 0));
    }
}

TEST_CASE("wilcoxon normal path tracks the exact path") {
    Rng rng(3);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        std::vector<double> a(8), b(8);
        for (double& v : a) v = rng.uniform();
        for (double& v : b) v = rng.uniform() + 0.3;
        const double exact = wilcoxon_rank_sum(a, b, WilcoxonMethod::exact).p_value;
        const double approx = wilcoxon_rank_sum(a, b, WilcoxonMethod::approximate).p_value;
        worst = std::max(worst, std::abs(exact - approx));
    }
    CHECK(worst < 0.02);
}

TEST_CASE("wilcoxon symmetry") {
    Rng rng(4);
    for (int k = 0; k < 100; ++k) {
        std::vector<double> a(5 + rng.index(30)), b(5 + rng.index(30));
        for (double& v : a) v = static_cast<double>(rng.index(20));
        for (double& v : b) v = static_cast<double>(rng.index(20));
        const auto ab = wilcoxon_rank_sum(a, b);
        const auto ba = wilcoxon_rank_sum(b, a);
        CHECK(std::abs(ab.p_value - ba.p_value) <= 1e-12);
        CHECK(std::abs(ab.z_value + ba.z_value) <= 1e-12);
    }
}

TEST_CASE("wilcoxon fully separated 30 vs 30") {
    std::vector<double> low(30), high(30);
    for (int i = 0; i < 30; ++i) {
        low[i] = 1e-100 * (i + 1);
        high[i] = 100.0 + i;
    }
    const auto r = wilcoxon_rank_sum(high, low);
    CHECK_FALSE(r.exact);
    CHECK(r.h == 1);
    CHECK(r.p_value == doctest::Approx(3.02e-11).epsilon(5e-3));
    CHECK(r.z_value == doctest::Approx(6.65).epsilon(1e-3));
}

TEST_CASE("friedman") {
    SUBCASE("total order") {
        ResultTensor t{{{1, 2, 3}, {4, 5, 6}}, {{0, 0, 0}, {1, 1, 1}}};
        const auto f = friedman(t);
        for (const auto& row : f.per_function_mean_ranks) {
            CHECK(row == std::vector<double>{1.0, 2.0});
        }
        CHECK(f.totals == std::vector<double>{2.0, 4.0});
        CHECK(f.averages == std::vector<double>{1.0, 2.0});
        CHECK(f.final_rank == std::vector<int>{1, 2});
    }
    SUBCASE("all identical") {
        for (std::size_t k = 2; k <= 6; ++k) {
            ResultTensor t(3, std::vector<std::vector<double>>(k, std::vector<double>(5, 1.0)));
            const auto f = friedman(t);
            for (const auto& row : f.per_function_mean_ranks) {
                for (double r : row) CHECK(r == (k + 1) / 2.0);
            }
        }
    }
    SUBCASE("row sums and permutation") {
        Rng rng(5);
        ResultTensor t(4, std::vector<std::vector<double>>(5, std::vector<double>(7)));
        for (auto& fn : t)
            for (auto& alg : fn)
                for (double& v : alg) v = static_cast<double>(rng.index(4));
        const auto f = friedman(t);
        for (const auto& row : f.per_function_mean_ranks) {
            CHECK(std::accumulate(row.begin(), row.end(), 0.0) == doctest::Approx(15.0));
        }
        auto ranks = f.final_rank;
        std::sort(ranks.begin(), ranks.end());
        CHECK(ranks == std::vector<int>{1, 2, 3, 4, 5});
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(friedman({}), std::invalid_argument);
        CHECK_THROWS_AS(friedman({{{1.0}}}), std::invalid_argument);
        CHECK_THROWS_AS(friedman({{{1.0, 2.0}, {1.0}}}), std::invalid_argument);
    }
}

TEST_CASE("diversity") {
    CHECK(diversity(std::vector<Vector>(4, Vector{3.0, -1.0})) == 0.0);
    CHECK(diversity(std::vector<Vector>{{0.0, 0.0}, {2.0, 0.0}}) == 1.0);
    Rng rng(6);
    std::vector<Vector> pos(10, Vector(3));
    for (auto& x : pos)
        for (double& v : x) v = rng.uniform(-5.0, 5.0);
    auto scaled = pos;
    for (auto& x : scaled)
        for (double& v : x) v *= 2.5;
    CHECK(diversity(scaled) == doctest::Approx(2.5 * diversity(pos)).epsilon(1e-13));
    CHECK_THROWS_AS(diversity(std::vector<Vector>{}), std::invalid_argument);
}

TEST_CASE("exploration and exploitation percentages") {
    auto s = xpl_xpt(3.0, 3.0);
    CHECK(s.exploration_pct == 100.0);
    CHECK(s.exploitation_pct == 0.0);
    s = xpl_xpt(0.0, 3.0);
    CHECK(s.exploration_pct == 0.0);
    CHECK(s.exploitation_pct == 100.0);
    s = xpl_xpt(0.25, 1.0);
    CHECK(s.exploration_pct == 25.0);
    CHECK(s.exploitation_pct == 75.0);
    s = xpl_xpt(0.0, 0.0);
    CHECK(s.degenerate);

    Rng rng(7);
    std::vector<double> div(200);
    for (double& d : div) d = rng.uniform(0.0, 10.0);
    const auto trace = diversity_trace(div);
    for (std::size_t t = 0; t < div.size(); ++t) {
        CHECK(trace.exploration_pct[t] + trace.exploitation_pct[t] == doctest::Approx(100.0));
    }
    CHECK(trace.exploration_pct.front() == 100.0);
}

TEST_CASE("box stats use nearest rank") {
    const std::vector<double> v{5, 1, 4, 2, 3};
    const auto b = box_stats(v);
    CHECK(b.min == 1);
    CHECK(b.q1 == 2);
    CHECK(b.median == 3);
    CHECK(b.q3 == 4);
    CHECK(b.max == 5);
    const auto c = box_stats(std::vector<double>(9, 2.5));
    CHECK(c.min == 2.5);
    CHECK(c.q1 == 2.5);
    CHECK(c.median == 2.5);
    CHECK(c.q3 == 2.5);
    CHECK(c.max == 2.5);
    CHECK_THROWS_AS(box_stats(std::vector<double>{}), std::invalid_argument);
}
