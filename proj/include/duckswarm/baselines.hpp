#pragma once

#include <array>

#include "duckswarm/core.hpp"

namespace duckswarm {

struct PsoParams {
    double v_min = -1.0;
    double v_max = 1.0;
    double c1 = 2.0;
    double c2 = 2.0;
    double w_start = 0.9;
    double w_end = 0.2;

    /// Keys: v_min, v_max, c1, c2, w_start, w_end.
    static PsoParams from_overrides(const ParamOverrides& overrides);
    void validate() const;
};

struct GwoParams {
    double a_start = 2.0;  // decays linearly to 0

    /// Key: a_start.
    static GwoParams from_overrides(const ParamOverrides& overrides);
    void validate() const;
};

struct ScaParams {
    double a = 2.0;

    /// Key: a.
    static ScaParams from_overrides(const ParamOverrides& overrides);
    void validate() const;
};

/// Global-best PSO with linearly decreasing inertia and clamped velocities.
/// Velocities start at zero; personal bests start at the initial positions.
class ParticleSwarm final : public Algorithm {
public:
    explicit ParticleSwarm(PsoParams params = {});

    AlgorithmId id() const noexcept override { return AlgorithmId::pso; }
    void start(Swarm& swarm, RunContext& ctx) override;
    void iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) override;

    const std::vector<Vector>& velocities() const noexcept { return velocity_; }

private:
    PsoParams params_;
    std::vector<Vector> velocity_;
    std::vector<Vector> best_pos_;
    Vector best_fit_;
};

/// Grey wolf optimizer: every wolf moves to the mean of three candidates
/// guided by the alpha, beta and delta wolves (historical top three, earlier
/// agent index wins ties).
class GreyWolf final : public Algorithm {
public:
    explicit GreyWolf(GwoParams params = {});

    AlgorithmId id() const noexcept override { return AlgorithmId::gwo; }
    void start(Swarm& swarm, RunContext& ctx) override;
    void iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) override;

    /// alpha, beta, delta positions.
    const std::array<Vector, 3>& leaders() const noexcept { return leader_pos_; }

private:
    void offer(const Vector& pos, double fit);

    GwoParams params_;
    std::array<Vector, 3> leader_pos_;
    std::array<double, 3> leader_fit_{};
};

/// Sine cosine algorithm; the destination is the swarm leader and the
/// amplitude r1 = a - t*a/t_max.
class SineCosine final : public Algorithm {
public:
    explicit SineCosine(ScaParams params = {});

    AlgorithmId id() const noexcept override { return AlgorithmId::sca; }
    void iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) override;

    /// One agent's move for a given amplitude; exposed for schedule tests.
    static void move_agent(Vector& x, const Vector& destination, double r1, Rng& rng);

private:
    ScaParams params_;
};

}  // namespace duckswarm
