#include "duckswarm/dsa.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include <fmt/format.h>

namespace duckswarm {

namespace {

double override_or(const ParamOverrides& overrides, std::string_view key, double fallback) {
    if (auto it = overrides.find(key); it != overrides.end()) {
        return it->second;
    }
    return fallback;
}

}  // namespace

DsaParams DsaParams::from_overrides(const ParamOverrides& overrides) {
    for (const auto& [key, value] : overrides) {
        if (key != "p_switch" && key != "fp" && key != "iteration_best") {
            throw ConfigError(fmt::format("unknown dsa parameter '{}'", key));
        }
    }
    DsaParams params;
    params.p_switch = override_or(overrides, "p_switch", params.p_switch);
    params.fp = override_or(overrides, "fp", params.fp);
    params.compare_to_iteration_best = override_or(overrides, "iteration_best", 0.0) != 0.0;
    params.validate();
    return params;
}

void DsaParams::validate() const {
    if (!(p_switch >= 0.0 && p_switch <= 1.0)) {
        throw ConfigError(fmt::format("dsa p_switch must lie in [0, 1], got {}", p_switch));
    }
    if (!(fp > 0.0)) {
        throw ConfigError(fmt::format("dsa fp must be positive, got {}", fp));
    }
}

double mu_from_draw(std::size_t t, std::size_t t_max, double u) {
    const double k = std::sin(2.0 * u) + 1.0;
    return k * (1.0 - static_cast<double>(t) / static_cast<double>(t_max));
}

double mu_schedule(std::size_t t, std::size_t t_max, Rng& rng) {
    return mu_from_draw(t, t_max, rng.uniform());
}

double coefficient_from_draw(double fp, double u) { return u / fp; }

double sample_coefficient(double fp, Rng& rng) { return coefficient_from_draw(fp, rng.uniform()); }

std::size_t pick_other(std::size_t n, std::size_t exclude, Rng& rng) {
    const std::size_t r = rng.index(n - 1);
    const std::size_t j = r < exclude ? r : r + 1;
    assert(j != exclude && j < n);
    return j;
}

void exploration_step(Swarm& swarm, RunContext& ctx, double mu, const DsaParams& params) {
    const std::size_t n = swarm.size();
    const std::size_t dim = ctx.space().dim();
    Rng& rng = ctx.rng();

    std::vector<Vector> candidates(n, Vector(dim));
    for (std::size_t i = 0; i < n; ++i) {
        const Vector& xi = swarm.positions[i];
        Vector& cand = candidates[i];
        if (params.p_switch >= rng.uniform()) {
            const double sign = rng.uniform() - 0.5 < 0.0 ? -1.0 : 1.0;
            for (std::size_t d = 0; d < dim; ++d) {
                cand[d] = xi[d] + mu * xi[d] * sign;
            }
        } else {
            const std::size_t j = pick_other(n, i, rng);
            const double cf1 = sample_coefficient(params.fp, rng);
            const double cf2 = sample_coefficient(params.fp, rng);
            const Vector& xj = swarm.positions[j];
            for (std::size_t d = 0; d < dim; ++d) {
                cand[d] = xi[d] + cf1 * (swarm.leader_pos[d] - xi[d]) + cf2 * (xj[d] - xi[d]);
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        clamp_in_place(candidates[i], ctx.space());
        swarm.fitness[i] = ctx.evaluate(candidates[i], i);
        swarm.positions[i] = std::move(candidates[i]);
        swarm.offer_leader(i);
    }
}

void exploitation_step(Swarm& swarm, RunContext& ctx, double mu, const DsaParams& params) {
    const std::size_t n = swarm.size();
    const std::size_t dim = ctx.space().dim();
    Rng& rng = ctx.rng();

    const double reference = params.compare_to_iteration_best
                                 ? *std::min_element(swarm.fitness.begin(), swarm.fitness.end())
                                 : swarm.leader_fit;

    std::vector<Vector> candidates(n, Vector(dim));
    for (std::size_t i = 0; i < n; ++i) {
        const Vector& xi = swarm.positions[i];
        Vector& cand = candidates[i];
        if (swarm.fitness[i] > reference) {
            for (std::size_t d = 0; d < dim; ++d) {
                cand[d] = xi[d] + mu * (swarm.leader_pos[d] - xi[d]);
            }
        } else {
            const std::size_t k = rng.index(n);
            const std::size_t j = pick_other(n, k, rng);
            assert(k != j);
            const double kf1 = sample_coefficient(params.fp, rng);
            const double kf2 = sample_coefficient(params.fp, rng);
            const Vector& xk = swarm.positions[k];
            const Vector& xj = swarm.positions[j];
            for (std::size_t d = 0; d < dim; ++d) {
                cand[d] = xi[d] + kf1 * (swarm.leader_pos[d] - xi[d]) + kf2 * (xk[d] - xj[d]);
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        clamp_in_place(candidates[i], ctx.space());
        const double f_new = ctx.evaluate(candidates[i], i);
        if (f_new < swarm.fitness[i]) {
            swarm.positions[i] = std::move(candidates[i]);
            swarm.fitness[i] = f_new;
        }
        swarm.offer_leader(i);
    }
}

void dsa_iteration(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max,
                   const DsaParams& params) {
    const double mu = mu_schedule(t, t_max, ctx.rng());
    exploration_step(swarm, ctx, mu, params);
    exploitation_step(swarm, ctx, mu, params);
}

DuckSwarm::DuckSwarm(DsaParams params) : params_(params) { params_.validate(); }

void DuckSwarm::iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) {
    dsa_iteration(swarm, ctx, t, t_max, params_);
}

}  // namespace duckswarm
