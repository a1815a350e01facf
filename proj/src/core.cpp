#include "duckswarm/core.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace duckswarm {

NonFiniteObjective::NonFiniteObjective(long iteration, std::size_t agent, double value)
    : std::runtime_error(fmt::format("objective returned {} at iteration {} for agent {}", value,
                                     iteration, agent)),
      iteration_(iteration),
      agent_(agent) {}

std::size_t Rng::index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::index: empty range");
    }
    const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(k, n - 1);
}

SearchSpace::SearchSpace(Vector lower, Vector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw ConfigError("search space needs at least one dimension");
    }
    if (lower_.size() != upper_.size()) {
        throw ConfigError("search space bounds differ in length");
    }
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(lower_[j] < upper_[j])) {
            throw ConfigError(fmt::format("search space: lower[{}] = {} is not below upper[{}] = {}",
                                          j, lower_[j], j, upper_[j]));
        }
    }
}

SearchSpace SearchSpace::uniform(std::size_t dim, double lower, double upper) {
    return SearchSpace(Vector(dim, lower), Vector(dim, upper));
}

bool SearchSpace::contains(std::span<const double> x) const {
    if (x.size() != dim()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) {
            return false;
        }
    }
    return true;
}

bool Swarm::offer_leader(std::size_t i) {
    if (fitness[i] < leader_fit) {
        leader_fit = fitness[i];
        leader_pos = positions[i];
        return true;
    }
    return false;
}

std::string_view to_string(AlgorithmId id) {
    switch (id) {
    case AlgorithmId::dsa: return "dsa";
    case AlgorithmId::pso: return "pso";
    case AlgorithmId::gwo: return "gwo";
    case AlgorithmId::sca: return "sca";
    }
    return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view text) {
    for (auto id : {AlgorithmId::dsa, AlgorithmId::pso, AlgorithmId::gwo, AlgorithmId::sca}) {
        if (to_string(id) == text) {
            return id;
        }
    }
    return std::nullopt;
}

void RunConfig::validate() const {
    // DSA's exploitation draws two distinct neighbours k != j.
    if (n_agents < 3) {
        throw ConfigError(fmt::format("n_agents must be at least 3, got {}", n_agents));
    }
    if (max_iter < 1) {
        throw ConfigError("max_iter must be positive");
    }
}

RunContext::RunContext(const Problem& problem, std::uint64_t seed) : problem_(&problem), rng_(seed) {}

double RunContext::evaluate(std::span<const double> x, std::size_t agent) {
    const double value = problem_->objective(x, rng_);
    ++evaluations_;
    if (!std::isfinite(value)) {
        throw NonFiniteObjective(iteration_, agent, value);
    }
    return value;
}

Swarm init_population(RunContext& ctx, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("init_population: n must be positive");
    }
    const SearchSpace& space = ctx.space();
    Swarm swarm;
    swarm.positions.assign(n, Vector(space.dim()));
    swarm.fitness.assign(n, 0.0);
    for (auto& pos : swarm.positions) {
        for (std::size_t j = 0; j < space.dim(); ++j) {
            pos[j] = space.lower()[j] + (space.upper()[j] - space.lower()[j]) * ctx.rng().uniform();
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        swarm.fitness[i] = ctx.evaluate(swarm.positions[i], i);
        swarm.offer_leader(i);
    }
    return swarm;
}

Vector clamp_to_space(std::span<const double> pos, const SearchSpace& space) {
    Vector out(pos.begin(), pos.end());
    clamp_in_place(out, space);
    return out;
}

void clamp_in_place(Vector& pos, const SearchSpace& space) {
    for (std::size_t j = 0; j < pos.size(); ++j) {
        pos[j] = std::min(space.upper()[j], std::max(space.lower()[j], pos[j]));
    }
}

void Algorithm::start(Swarm&, RunContext&) {}

}  // namespace duckswarm
