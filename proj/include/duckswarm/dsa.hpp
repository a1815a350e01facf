#pragma once

#include "duckswarm/core.hpp"

namespace duckswarm {

/// Duck swarm parameters. Cooperation/competition coefficients are not
/// stored: each use draws a fresh value through sample_coefficient().
struct DsaParams {
    double p_switch = 0.5;  // probability of the dispersal branch in exploration
    double fp = 0.618;      // coefficients are drawn from (0, 1/fp)

    /// Compare exploitation candidates against the best fitness of the
    /// current swarm instead of the historical leader. Off by default.
    bool compare_to_iteration_best = false;

    /// Reads the keys "p_switch", "fp" and "iteration_best" (0/1).
    static DsaParams from_overrides(const ParamOverrides& overrides);

    void validate() const;
};

/// mu = K * (1 - t/t_max), K = sin(2u) + 1.
double mu_from_draw(std::size_t t, std::size_t t_max, double u);
double mu_schedule(std::size_t t, std::size_t t_max, Rng& rng);

/// (1/fp) * u.
double coefficient_from_draw(double fp, double u);
double sample_coefficient(double fp, Rng& rng);

/// Uniform index in [0, n) other than `exclude`. n >= 2.
std::size_t pick_other(std::size_t n, std::size_t exclude, Rng& rng);

/// Dispersal phase. Candidates are built for every agent from the positions
/// at phase start (draw order per agent: branch u; then r for the dispersal
/// branch, or neighbour j, CF1, CF2 for the cooperative branch). Candidates
/// are then clamped, evaluated and adopted unconditionally, with the leader
/// refreshed after every evaluation.
void exploration_step(Swarm& swarm, RunContext& ctx, double mu, const DsaParams& params);

/// Foraging phase. Agents worse than the leader step toward it by mu; agents
/// tied with it move by KF1 toward the leader plus KF2 along X_k - X_j for a
/// random pair k != j (draw order: k, j, KF1, KF2). A candidate replaces the
/// agent only on strict improvement; the leader is refreshed after each agent.
void exploitation_step(Swarm& swarm, RunContext& ctx, double mu, const DsaParams& params);

/// One full iteration: mu drawn once, then exploration and exploitation.
void dsa_iteration(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max,
                   const DsaParams& params);

class DuckSwarm final : public Algorithm {
public:
    explicit DuckSwarm(DsaParams params = {});

    AlgorithmId id() const noexcept override { return AlgorithmId::dsa; }
    void iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) override;

    const DsaParams& params() const noexcept { return params_; }

private:
    DsaParams params_;
};

}  // namespace duckswarm
