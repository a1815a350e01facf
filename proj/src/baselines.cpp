#include "duckswarm/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace duckswarm {

namespace {

void read_overrides(const ParamOverrides& overrides, std::string_view algo,
                    std::initializer_list<std::pair<std::string_view, double*>> slots) {
    for (const auto& [key, value] : overrides) {
        auto it = std::find_if(slots.begin(), slots.end(),
                               [&key](const auto& slot) { return slot.first == key; });
        if (it == slots.end()) {
            throw ConfigError(fmt::format("unknown {} parameter '{}'", algo, key));
        }
        *it->second = value;
    }
}

}  // namespace

PsoParams PsoParams::from_overrides(const ParamOverrides& overrides) {
    PsoParams p;
    read_overrides(overrides, "pso",
                   {{"v_min", &p.v_min}, {"v_max", &p.v_max}, {"c1", &p.c1}, {"c2", &p.c2},
                    {"w_start", &p.w_start}, {"w_end", &p.w_end}});
    p.validate();
    return p;
}

void PsoParams::validate() const {
    if (!(v_min < v_max)) {
        throw ConfigError("pso requires v_min < v_max");
    }
    if (!(w_start >= w_end)) {
        throw ConfigError("pso requires w_start >= w_end");
    }
}

GwoParams GwoParams::from_overrides(const ParamOverrides& overrides) {
    GwoParams p;
    read_overrides(overrides, "gwo", {{"a_start", &p.a_start}});
    p.validate();
    return p;
}

void GwoParams::validate() const {
    if (!(a_start > 0.0)) {
        throw ConfigError("gwo requires a_start > 0");
    }
}

ScaParams ScaParams::from_overrides(const ParamOverrides& overrides) {
    ScaParams p;
    read_overrides(overrides, "sca", {{"a", &p.a}});
    p.validate();
    return p;
}

void ScaParams::validate() const {
    if (!(a > 0.0)) {
        throw ConfigError("sca requires a > 0");
    }
}

// ---------------------------------------------------------------------------
// PSO

ParticleSwarm::ParticleSwarm(PsoParams params) : params_(params) { params_.validate(); }

void ParticleSwarm::start(Swarm& swarm, RunContext&) {
    velocity_.assign(swarm.size(), Vector(swarm.positions.front().size(), 0.0));
    best_pos_ = swarm.positions;
    best_fit_ = swarm.fitness;
}

void ParticleSwarm::iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) {
    const double w = params_.w_start - (params_.w_start - params_.w_end) * static_cast<double>(t) /
                                           static_cast<double>(t_max);
    const std::size_t dim = ctx.space().dim();
    Rng& rng = ctx.rng();

    for (std::size_t i = 0; i < swarm.size(); ++i) {
        Vector& x = swarm.positions[i];
        Vector& v = velocity_[i];
        for (std::size_t d = 0; d < dim; ++d) {
            const double r1 = rng.uniform();
            const double r2 = rng.uniform();
            v[d] = w * v[d] + params_.c1 * r1 * (best_pos_[i][d] - x[d]) +
                   params_.c2 * r2 * (swarm.leader_pos[d] - x[d]);
            v[d] = std::clamp(v[d], params_.v_min, params_.v_max);
            x[d] += v[d];
        }
        clamp_in_place(x, ctx.space());
    }

    for (std::size_t i = 0; i < swarm.size(); ++i) {
        swarm.fitness[i] = ctx.evaluate(swarm.positions[i], i);
        if (swarm.fitness[i] < best_fit_[i]) {
            best_fit_[i] = swarm.fitness[i];
            best_pos_[i] = swarm.positions[i];
        }
        swarm.offer_leader(i);
    }
}

// ---------------------------------------------------------------------------
// GWO

GreyWolf::GreyWolf(GwoParams params) : params_(params) { params_.validate(); }

void GreyWolf::offer(const Vector& pos, double fit) {
    // Strict comparisons keep the earlier agent on ties.
    if (fit < leader_fit_[0]) {
        leader_fit_[2] = leader_fit_[1];
        leader_pos_[2] = std::move(leader_pos_[1]);
        leader_fit_[1] = leader_fit_[0];
        leader_pos_[1] = std::move(leader_pos_[0]);
        leader_fit_[0] = fit;
        leader_pos_[0] = pos;
    } else if (fit < leader_fit_[1]) {
        leader_fit_[2] = leader_fit_[1];
        leader_pos_[2] = std::move(leader_pos_[1]);
        leader_fit_[1] = fit;
        leader_pos_[1] = pos;
    } else if (fit < leader_fit_[2]) {
        leader_fit_[2] = fit;
        leader_pos_[2] = pos;
    }
}

void GreyWolf::start(Swarm& swarm, RunContext&) {
    leader_fit_.fill(std::numeric_limits<double>::infinity());
    for (auto& p : leader_pos_) {
        p = swarm.positions.front();
    }
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        offer(swarm.positions[i], swarm.fitness[i]);
    }
}

void GreyWolf::iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) {
    const double a = params_.a_start -
                     params_.a_start * static_cast<double>(t) / static_cast<double>(t_max);
    const std::size_t dim = ctx.space().dim();
    Rng& rng = ctx.rng();

    for (std::size_t i = 0; i < swarm.size(); ++i) {
        Vector& x = swarm.positions[i];
        for (std::size_t d = 0; d < dim; ++d) {
            double sum = 0.0;
            for (const Vector& leader : leader_pos_) {
                const double r1 = rng.uniform();
                const double r2 = rng.uniform();
                const double big_a = 2.0 * a * r1 - a;
                const double big_c = 2.0 * r2;
                const double dist = std::abs(big_c * leader[d] - x[d]);
                sum += leader[d] - big_a * dist;
            }
            x[d] = sum / 3.0;
        }
        clamp_in_place(x, ctx.space());
    }

    for (std::size_t i = 0; i < swarm.size(); ++i) {
        swarm.fitness[i] = ctx.evaluate(swarm.positions[i], i);
        offer(swarm.positions[i], swarm.fitness[i]);
        swarm.offer_leader(i);
    }
}

// ---------------------------------------------------------------------------
// SCA

SineCosine::SineCosine(ScaParams params) : params_(params) { params_.validate(); }

void SineCosine::move_agent(Vector& x, const Vector& destination, double r1, Rng& rng) {
    for (std::size_t d = 0; d < x.size(); ++d) {
        const double r2 = 2.0 * std::numbers::pi * rng.uniform();
        const double r3 = 2.0 * rng.uniform();
        const double r4 = rng.uniform();
        const double reach = std::abs(r3 * destination[d] - x[d]);
        x[d] += r4 < 0.5 ? r1 * std::sin(r2) * reach : r1 * std::cos(r2) * reach;
    }
}

void SineCosine::iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) {
    const double r1 = params_.a - static_cast<double>(t) * params_.a / static_cast<double>(t_max);
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        move_agent(swarm.positions[i], swarm.leader_pos, r1, ctx.rng());
        clamp_in_place(swarm.positions[i], ctx.space());
    }
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        swarm.fitness[i] = ctx.evaluate(swarm.positions[i], i);
        swarm.offer_leader(i);
    }
}

}  // namespace duckswarm
