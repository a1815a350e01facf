#include <chrono>

#include "duckswarm/baselines.hpp"
#include "duckswarm/core.hpp"
#include "duckswarm/dsa.hpp"
#include "duckswarm/metrics.hpp"

namespace duckswarm {

std::unique_ptr<Algorithm> make_algorithm(AlgorithmId id, const ParamOverrides& overrides) {
    switch (id) {
    case AlgorithmId::dsa: return std::make_unique<DuckSwarm>(DsaParams::from_overrides(overrides));
    case AlgorithmId::pso:
        return std::make_unique<ParticleSwarm>(PsoParams::from_overrides(overrides));
    case AlgorithmId::gwo: return std::make_unique<GreyWolf>(GwoParams::from_overrides(overrides));
    case AlgorithmId::sca: return std::make_unique<SineCosine>(ScaParams::from_overrides(overrides));
    }
    throw ConfigError("unknown algorithm");
}

RunRecord run(const Problem& problem, const RunConfig& config) {
    auto algorithm = make_algorithm(config.algorithm, config.algorithm_params);
    return run(problem, config, *algorithm);
}

RunRecord run(const Problem& problem, const RunConfig& config, Algorithm& algorithm,
              const SwarmObserver& observer) {
    config.validate();
    const auto started = std::chrono::steady_clock::now();

    RunContext ctx(problem, config.seed);
    Swarm swarm = init_population(ctx, config.n_agents);
    algorithm.start(swarm, ctx);
    if (observer) {
        observer(-1, swarm);
    }

    RunRecord record;
    record.seed = config.seed;
    record.convergence.reserve(config.max_iter);
    record.diversity.reserve(config.max_iter);
    for (std::size_t t = 0; t < config.max_iter; ++t) {
        ctx.set_iteration(static_cast<long>(t));
        algorithm.iterate(swarm, ctx, t, config.max_iter);
        record.convergence.push_back(swarm.leader_fit);
        record.diversity.push_back(diversity(swarm));
        if (observer) {
            observer(static_cast<long>(t), swarm);
        }
    }

    record.best_pos = swarm.leader_pos;
    record.best_fit = swarm.leader_fit;
    record.evaluations = ctx.evaluations();
    record.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

}  // namespace duckswarm
