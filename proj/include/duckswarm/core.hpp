#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace duckswarm {

using Vector = std::vector<double>;

/// Raised for invalid user-facing configuration: unknown ids, bad parameter
/// values, malformed config files. The CLI maps it to exit status 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an objective returns NaN or +-inf during a run.
class NonFiniteObjective : public std::runtime_error {
public:
    NonFiniteObjective(long iteration, std::size_t agent, double value);

    /// -1 during population initialization.
    long iteration() const noexcept { return iteration_; }
    std::size_t agent() const noexcept { return agent_; }

private:
    long iteration_;
    std::size_t agent_;
};

/// Seeded random stream. Every stochastic draw of a run goes through one
/// instance, so a run is fully determined by its seed.
///
/// Unit draws are built from the top 53 bits of a 64-bit Mersenne twister
/// instead of std::uniform_real_distribution, whose algorithm is left to the
/// standard library vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t index(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// Feasible box: dim >= 1 and lower[j] < upper[j] for every coordinate.
class SearchSpace {
public:
    SearchSpace(Vector lower, Vector upper);

    static SearchSpace uniform(std::size_t dim, double lower, double upper);

    std::size_t dim() const noexcept { return lower_.size(); }
    const Vector& lower() const noexcept { return lower_; }
    const Vector& upper() const noexcept { return upper_; }

    bool contains(std::span<const double> x) const;

private:
    Vector lower_;
    Vector upper_;
};

using Objective = std::function<double(std::span<const double>, Rng&)>;

/// g(x) <= 0 means satisfied.
using Constraint = std::function<double(std::span<const double>)>;

/// Minimization problem over a box. The Rng argument of the objective is
/// the run's stream; only stochastic objectives (flagged) consume it.
struct Problem {
    std::string id;
    SearchSpace space;
    Objective objective;
    std::vector<Constraint> constraints;
    std::optional<double> known_optimum;
    bool stochastic = false;

    double operator()(std::span<const double> x, Rng& rng) const { return objective(x, rng); }
};

struct Swarm {
    std::vector<Vector> positions;
    Vector fitness;
    Vector leader_pos;
    double leader_fit = std::numeric_limits<double>::infinity();

    std::size_t size() const noexcept { return positions.size(); }

    /// Adopts agent i as leader if it strictly improves on the historical best.
    bool offer_leader(std::size_t i);
};

enum class AlgorithmId { dsa, pso, gwo, sca };

std::string_view to_string(AlgorithmId id);
std::optional<AlgorithmId> parse_algorithm(std::string_view text);

using ParamOverrides = std::map<std::string, double, std::less<>>;

struct RunConfig {
    AlgorithmId algorithm = AlgorithmId::dsa;
    std::size_t n_agents = 30;
    std::size_t max_iter = 200;
    std::uint64_t seed = 0;
    ParamOverrides algorithm_params;

    /// Throws ConfigError unless n_agents >= 3 and max_iter >= 1.
    void validate() const;
};

struct RunRecord {
    Vector best_pos;
    double best_fit = std::numeric_limits<double>::infinity();
    Vector convergence;
    Vector diversity;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
};

/// Per-run evaluation state shared by an algorithm's iteration body: the
/// problem, the run's random stream, and an evaluation counter that also
/// enforces finite objective values.
class RunContext {
public:
    RunContext(const Problem& problem, std::uint64_t seed);

    const Problem& problem() const noexcept { return *problem_; }
    const SearchSpace& space() const noexcept { return problem_->space; }
    Rng& rng() noexcept { return rng_; }

    void set_iteration(long t) noexcept { iteration_ = t; }
    long iteration() const noexcept { return iteration_; }
    std::uint64_t evaluations() const noexcept { return evaluations_; }

    /// Throws NonFiniteObjective naming the current iteration and agent.
    double evaluate(std::span<const double> x, std::size_t agent);

private:
    const Problem* problem_;
    Rng rng_;
    long iteration_ = -1;
    std::uint64_t evaluations_ = 0;
};

/// positions[i][j] = lower[j] + (upper[j] - lower[j]) * u, u ~ U(0,1), drawn
/// row by row. Evaluates every agent and sets the leader to the argmin.
Swarm init_population(RunContext& ctx, std::size_t n);

Vector clamp_to_space(std::span<const double> pos, const SearchSpace& space);
void clamp_in_place(Vector& pos, const SearchSpace& space);

/// Iteration body of one optimizer. The driver calls start() once after the
/// initial population is evaluated, then iterate() for t = 0 .. t_max-1.
class Algorithm {
public:
    virtual ~Algorithm() = default;

    virtual AlgorithmId id() const noexcept = 0;
    virtual void start(Swarm& swarm, RunContext& ctx);
    virtual void iterate(Swarm& swarm, RunContext& ctx, std::size_t t, std::size_t t_max) = 0;
};

std::unique_ptr<Algorithm> make_algorithm(AlgorithmId id, const ParamOverrides& overrides);

/// Single seeded run. Records leader fitness and population diversity after
/// every iteration.
RunRecord run(const Problem& problem, const RunConfig& config);

/// Same as above with a caller-supplied iteration body. The observer, when
/// set, sees the swarm after initialization (t = -1) and after each iteration.
using SwarmObserver = std::function<void(long t, const Swarm&)>;
RunRecord run(const Problem& problem, const RunConfig& config, Algorithm& algorithm,
              const SwarmObserver& observer = {});

}  // namespace duckswarm
