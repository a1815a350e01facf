#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "duckswarm/core.hpp"

namespace duckswarm {

enum class BenchmarkId {
    F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15, F16, F17, F18,
};

struct BenchmarkInfo {
    BenchmarkId id;
    std::string_view code;  // "F1" .. "F18"
    std::string_view name;
    double lower;
    double upper;
    std::size_t default_dim;
    bool fixed_dim;
    double f_min_per_dim;  // nonzero only for F8, whose optimum scales with dim
    double f_min;          // as tabulated (rounded for F15..F18)
};

const std::array<BenchmarkInfo, 18>& benchmark_table();
const BenchmarkInfo& benchmark_info(BenchmarkId id);

std::optional<BenchmarkId> parse_benchmark(std::string_view code);

/// Tabulated optimum for the given dimension (F8 scales with dim).
double tabulated_optimum(BenchmarkId id, std::size_t dim);

/// Builds the benchmark objective over its tabulated box. `dim` may only be
/// given for F1..F14; F15..F18 have fixed dimension and throw ConfigError.
/// F7 draws its noise term from the run's random stream.
Problem make_benchmark(BenchmarkId id, std::optional<std::size_t> dim = std::nullopt);

/// A known global minimizer, for consistency checks.
Vector optimum_location(BenchmarkId id, std::size_t dim);

/// High-precision optimum value at optimum_location() (F7: its deterministic part).
double precise_optimum(BenchmarkId id, std::size_t dim);

}  // namespace duckswarm
