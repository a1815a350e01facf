#include "duckswarm/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace duckswarm {

namespace {

using std::numbers::pi;
using Span = std::span<const double>;

double sphere(Span x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

double schwefel_2_22(Span x) {
    double sum = 0.0;
    double prod = 1.0;
    for (double v : x) {
        sum += std::abs(v);
        prod *= std::abs(v);
    }
    return sum + prod;
}

double schwefel_1_2(Span x) {
    double total = 0.0;
    double prefix = 0.0;
    for (double v : x) {
        prefix += v;
        total += prefix * prefix;
    }
    return total;
}

double schwefel_2_21(Span x) {
    double m = 0.0;
    for (double v : x) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

double rosenbrock(Span x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double cigar(Span x) {
    double tail = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        tail += x[i] * x[i];
    }
    return x[0] * x[0] + 1e6 * tail;
}

double quartic_deterministic(Span x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double sq = x[i] * x[i];
        s += static_cast<double>(i + 1) * sq * sq;
    }
    return s;
}

double schwefel_2_26(Span x) {
    double s = 0.0;
    for (double v : x) {
        s -= v * std::sin(std::sqrt(std::abs(v)));
    }
    return s;
}

// The constant is added after the sum so that near-zero inputs cancel to an
// exact 0.0.
double rastrigin(Span x) {
    double s = 0.0;
    for (double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * pi * v);
    }
    return s + 10.0 * static_cast<double>(x.size());
}

double ackley(Span x) {
    const auto d = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / d)) - std::exp(cs / d) + 20.0 + std::numbers::e;
}

double griewank(Span x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i];
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / 4000.0 - prod + 1.0;
}

double penalty_u(double v, double a, double k, double m) {
    if (v > a) {
        return k * std::pow(v - a, m);
    }
    if (v < -a) {
        return k * std::pow(-v - a, m);
    }
    return 0.0;
}

double penalized_1(Span x) {
    const std::size_t d = x.size();
    const auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    const double s0 = std::sin(pi * y(0));
    double s = 10.0 * s0 * s0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double yi = y(i) - 1.0;
        const double sn = std::sin(pi * y(i + 1));
        s += yi * yi * (1.0 + 10.0 * sn * sn);
    }
    const double yd = y(d - 1) - 1.0;
    s += yd * yd;
    double pen = 0.0;
    for (double v : x) {
        pen += penalty_u(v, 10.0, 100.0, 4.0);
    }
    return pi / static_cast<double>(d) * s + pen;
}

double penalized_2(Span x) {
    const std::size_t d = x.size();
    const double s0 = std::sin(3.0 * pi * x[0]);
    double s = s0 * s0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double xi = x[i] - 1.0;
        const double sn = std::sin(3.0 * pi * x[i + 1]);
        s += xi * xi * (1.0 + sn * sn);
    }
    const double xd = x[d - 1] - 1.0;
    const double sd = std::sin(2.0 * pi * x[d - 1]);
    s += xd * xd * (1.0 + sd * sd);
    double pen = 0.0;
    for (double v : x) {
        pen += penalty_u(v, 5.0, 100.0, 4.0);
    }
    return 0.1 * s + pen;
}

constexpr double kWeierA = 0.5;
constexpr double kWeierB = 3.0;
constexpr int kWeierKMax = 20;

double weierstrass_term(double v) {
    double s = 0.0;
    double ak = 1.0;
    double bk = 1.0;
    for (int k = 0; k <= kWeierKMax; ++k) {
        s += ak * std::cos(2.0 * pi * bk * (v + 0.5));
        ak *= kWeierA;
        bk *= kWeierB;
    }
    return s;
}

// Subtracting the per-coordinate offset inside the sum makes the optimum
// evaluate to exactly 0.0.
double weierstrass(Span x) {
    static const double offset = weierstrass_term(0.0);
    double s = 0.0;
    for (double v : x) {
        s += weierstrass_term(v) - offset;
    }
    return s;
}

double shekel_foxholes(Span x) {
    static constexpr std::array<double, 5> grid{-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        const double a1 = grid[j % 5];
        const double a2 = grid[j / 5];
        const double d1 = x[0] - a1;
        const double d2 = x[1] - a2;
        s += 1.0 / (static_cast<double>(j + 1) + std::pow(d1, 6) + std::pow(d2, 6));
    }
    return 1.0 / s;
}

double kowalik(Span x) {
    static constexpr std::array<double, 11> a{0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                              0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static constexpr std::array<double, 11> inv_b{0.25, 0.5, 1.0,  2.0,  4.0, 6.0,
                                                  8.0,  10.0, 12.0, 14.0, 16.0};
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double b = 1.0 / inv_b[i];
        const double model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += (a[i] - model) * (a[i] - model);
    }
    return s;
}

double six_hump_camel(Span x) {
    const double x1 = x[0];
    const double x2 = x[1];
    const double x1sq = x1 * x1;
    const double x2sq = x2 * x2;
    return 4.0 * x1sq - 2.1 * x1sq * x1sq + x1sq * x1sq * x1sq / 3.0 + x1 * x2 - 4.0 * x2sq +
           4.0 * x2sq * x2sq;
}

double branin(Span x) {
    const double x1 = x[0];
    const double x2 = x[1];
    const double t = x2 - 5.1 / (4.0 * pi * pi) * x1 * x1 + 5.0 / pi * x1 - 6.0;
    return t * t + 10.0 * (1.0 - 1.0 / (8.0 * pi)) * std::cos(x1) + 10.0;
}

using Fn = double (*)(Span);

Fn deterministic_fn(BenchmarkId id) {
    switch (id) {
    case BenchmarkId::F1: return sphere;
    case BenchmarkId::F2: return schwefel_2_22;
    case BenchmarkId::F3: return schwefel_1_2;
    case BenchmarkId::F4: return schwefel_2_21;
    case BenchmarkId::F5: return rosenbrock;
    case BenchmarkId::F6: return cigar;
    case BenchmarkId::F7: return quartic_deterministic;
    case BenchmarkId::F8: return schwefel_2_26;
    case BenchmarkId::F9: return rastrigin;
    case BenchmarkId::F10: return ackley;
    case BenchmarkId::F11: return griewank;
    case BenchmarkId::F12: return penalized_1;
    case BenchmarkId::F13: return penalized_2;
    case BenchmarkId::F14: return weierstrass;
    case BenchmarkId::F15: return shekel_foxholes;
    case BenchmarkId::F16: return kowalik;
    case BenchmarkId::F17: return six_hump_camel;
    case BenchmarkId::F18: return branin;
    }
    return sphere;
}

constexpr double kSchwefelArgmin = 420.9687462275036;
constexpr double kSchwefelMinPerDim = -418.9828872724338;

}  // namespace

const std::array<BenchmarkInfo, 18>& benchmark_table() {
    using B = BenchmarkId;
    static const std::array<BenchmarkInfo, 18> table{{
        {B::F1, "F1", "Sphere", -100.0, 100.0, 30, false, 0.0, 0.0},
        {B::F2, "F2", "Schwefel 2.22", -10.0, 10.0, 30, false, 0.0, 0.0},
        {B::F3, "F3", "Schwefel 1.2", -100.0, 100.0, 30, false, 0.0, 0.0},
        {B::F4, "F4", "Schwefel 2.21", -100.0, 100.0, 30, false, 0.0, 0.0},
        {B::F5, "F5", "Rosenbrock", -30.0, 30.0, 30, false, 0.0, 0.0},
        {B::F6, "F6", "Cigar", -100.0, 100.0, 30, false, 0.0, 0.0},
        {B::F7, "F7", "Quartic", -1.28, 1.28, 30, false, 0.0, 0.0},
        {B::F8, "F8", "Schwefel 2.26", -500.0, 500.0, 30, false, -418.9829, 0.0},
        {B::F9, "F9", "Rastrigin", -5.0, 5.0, 30, false, 0.0, 0.0},
        {B::F10, "F10", "Ackley", -32.0, 32.0, 30, false, 0.0, 0.0},
        {B::F11, "F11", "Griewank", -600.0, 600.0, 30, false, 0.0, 0.0},
        {B::F12, "F12", "Penalized 1", -50.0, 50.0, 30, false, 0.0, 0.0},
        {B::F13, "F13", "Penalized 2", -5.0, 5.0, 30, false, 0.0, 0.0},
        {B::F14, "F14", "Weierstrass", -1.0, 1.0, 30, false, 0.0, 0.0},
        {B::F15, "F15", "Shekel's Foxholes", -65.0, 65.0, 2, true, 0.0, 1.0},
        {B::F16, "F16", "Kowalik's", -5.0, 5.0, 4, true, 0.0, 0.00030},
        {B::F17, "F17", "Six-hump camel back", -5.0, 5.0, 2, true, 0.0, -1.0316},
        {B::F18, "F18", "Branin", -5.0, 5.0, 2, true, 0.0, 0.398},
    }};
    return table;
}

const BenchmarkInfo& benchmark_info(BenchmarkId id) {
    return benchmark_table()[static_cast<std::size_t>(id)];
}

std::optional<BenchmarkId> parse_benchmark(std::string_view code) {
    for (const auto& info : benchmark_table()) {
        if (info.code == code) {
            return info.id;
        }
    }
    return std::nullopt;
}

double tabulated_optimum(BenchmarkId id, std::size_t dim) {
    const auto& info = benchmark_info(id);
    if (info.f_min_per_dim != 0.0) {
        return info.f_min_per_dim * static_cast<double>(dim);
    }
    return info.f_min;
}

Problem make_benchmark(BenchmarkId id, std::optional<std::size_t> dim) {
    const auto& info = benchmark_info(id);
    if (dim && info.fixed_dim) {
        throw ConfigError(fmt::format("{} has fixed dimension {}; dim cannot be set", info.code,
                                      info.default_dim));
    }
    const std::size_t d = dim.value_or(info.default_dim);
    if (d == 0) {
        throw ConfigError(fmt::format("{}: dim must be positive", info.code));
    }
    if (id == BenchmarkId::F5 && d < 2) {
        throw ConfigError("F5 needs dim >= 2");
    }

    Objective objective;
    const Fn fn = deterministic_fn(id);
    if (id == BenchmarkId::F7) {
        objective = [fn](Span x, Rng& rng) { return fn(x) + rng.uniform(); };
    } else {
        objective = [fn](Span x, Rng&) { return fn(x); };
    }
    return Problem{
        .id = std::string(info.code),
        .space = SearchSpace::uniform(d, info.lower, info.upper),
        .objective = std::move(objective),
        .constraints = {},
        .known_optimum = tabulated_optimum(id, d),
        .stochastic = id == BenchmarkId::F7,
    };
}

Vector optimum_location(BenchmarkId id, std::size_t dim) {
    switch (id) {
    case BenchmarkId::F5:
    case BenchmarkId::F13: return Vector(dim, 1.0);
    case BenchmarkId::F8: return Vector(dim, kSchwefelArgmin);
    case BenchmarkId::F12: return Vector(dim, -1.0);
    case BenchmarkId::F15: return {-32.0, -32.0};
    case BenchmarkId::F16: return {0.192833, 0.190836, 0.123117, 0.135766};
    case BenchmarkId::F17: return {0.0898420131, -0.7126564030};
    case BenchmarkId::F18: return {pi, 2.275};
    default: return Vector(dim, 0.0);
    }
}

double precise_optimum(BenchmarkId id, std::size_t dim) {
    switch (id) {
    case BenchmarkId::F8: return kSchwefelMinPerDim * static_cast<double>(dim);
    case BenchmarkId::F15: return 0.998003837794449;
    case BenchmarkId::F16: return 0.000307485987;
    case BenchmarkId::F17: return -1.031628453489877;
    case BenchmarkId::F18: return 0.397887357729738;
    default: return 0.0;
    }
}

}  // namespace duckswarm
