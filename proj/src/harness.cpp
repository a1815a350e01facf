#include "duckswarm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "duckswarm/benchmarks.hpp"
#include "duckswarm/constrained.hpp"
#include "duckswarm/csv.hpp"

namespace duckswarm {

namespace fs = std::filesystem;

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += items[i];
    }
    return out;
}

std::vector<std::string> algorithm_names(const std::vector<AlgorithmId>& algos) {
    std::vector<std::string> out;
    for (auto a : algos) {
        out.emplace_back(to_string(a));
    }
    return out;
}

AlgorithmId algorithm_or_throw(std::string_view text) {
    if (auto a = parse_algorithm(text)) {
        return *a;
    }
    throw std::runtime_error(fmt::format("unknown algorithm '{}' in results file", text));
}

struct Cell {
    std::size_t problem = 0;  // index into the resolved problem list
    AlgorithmId algorithm = AlgorithmId::dsa;
    std::size_t n_agents = 0;
    std::size_t max_iter = 0;
    std::size_t run = 0;
    std::uint64_t seed = 0;
};

// Executes cells on `threads` workers. Each cell owns its seed, so the
// records do not depend on scheduling. on_done runs on the worker thread.
std::vector<RunRecord> execute(const std::vector<Problem>& problems, const std::vector<Cell>& cells,
                               std::size_t threads,
                               const std::function<void(const Cell&, const RunRecord&)>& on_done) {
    std::vector<RunRecord> records(cells.size());
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            const Cell& c = cells[i];
            try {
                RunConfig config;
                config.algorithm = c.algorithm;
                config.n_agents = c.n_agents;
                config.max_iter = c.max_iter;
                config.seed = c.seed;
                records[i] = run(problems[c.problem], config);
                if (on_done) {
                    on_done(c, records[i]);
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t count = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(cells.size(), 1));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return records;
}

std::vector<Problem> resolve_all(const ExperimentSpec& spec) {
    std::vector<Problem> out;
    for (const auto& id : spec.problems) {
        out.push_back(resolve_problem(id, spec.dim));
    }
    return out;
}

void write_trace(const fs::path& dir, std::string_view problem, AlgorithmId algo, std::size_t run,
                 const RunRecord& rec) {
    const auto trace = diversity_trace(rec.diversity);
    CsvWriter out(dir / fmt::format("trace_{}_{}_{}.csv", problem, to_string(algo), run),
                  {"iteration", "best_fitness", "diversity", "exploration_pct", "exploitation_pct"});
    for (std::size_t t = 0; t < rec.convergence.size(); ++t) {
        out.row({std::to_string(t + 1), format_number(rec.convergence[t]),
                 format_number(trace.div[t]), format_number(trace.exploration_pct[t]),
                 format_number(trace.exploitation_pct[t])});
    }
    out.close();
}

// Fitness values of one (problem, algorithm) group, in run order.
std::map<std::pair<std::string, AlgorithmId>, std::vector<const ResultRow*>> group_rows(
    const std::vector<ResultRow>& rows) {
    std::map<std::pair<std::string, AlgorithmId>, std::vector<const ResultRow*>> groups;
    for (const auto& r : rows) {
        groups[{r.problem, r.algorithm}].push_back(&r);
    }
    for (auto& [key, list] : groups) {
        std::sort(list.begin(), list.end(),
                  [](const ResultRow* l, const ResultRow* r) { return l->run < r->run; });
    }
    return groups;
}

std::vector<double> fitness_of(const std::vector<const ResultRow*>& list) {
    std::vector<double> out;
    for (const auto* r : list) {
        out.push_back(r->best_fitness);
    }
    return out;
}

// Results for the experiment's cells, reusing <out>/results.csv when present.
std::vector<ResultRow> load_or_bench(const ExperimentSpec& spec) {
    if (!fs::exists(spec.output_dir / "results.csv")) {
        return cmd_bench(spec);
    }
    spec.validate();
    return read_results(spec.output_dir);
}

std::vector<const ResultRow*> require_group(
    const std::map<std::pair<std::string, AlgorithmId>, std::vector<const ResultRow*>>& groups,
    const std::string& problem, AlgorithmId algo, std::size_t runs) {
    const auto it = groups.find({problem, algo});
    if (it == groups.end() || it->second.size() != runs) {
        throw std::runtime_error(fmt::format(
            "results.csv has {} runs for {}/{}, expected {}; rerun bench into a fresh directory",
            it == groups.end() ? 0 : it->second.size(), problem, to_string(algo), runs));
    }
    return it->second;
}

}  // namespace

void ExperimentSpec::validate() const {
    if (problems.empty()) {
        throw ConfigError("no problems given");
    }
    if (algorithms.empty()) {
        throw ConfigError("no algorithms given");
    }
    if (runs == 0) {
        throw ConfigError("runs must be positive");
    }
    if (n_agents < 3) {
        throw ConfigError(fmt::format("agents must be at least 3, got {}", n_agents));
    }
    if (max_iter == 0) {
        throw ConfigError("iters must be positive");
    }
    if (dim && *dim == 0) {
        throw ConfigError("dim must be positive");
    }
    if (threads == 0) {
        throw ConfigError("threads must be positive");
    }
    for (const auto& id : problems) {
        if (!parse_benchmark(id) && !is_engineering_id(id)) {
            throw ConfigError(fmt::format("unknown problem id '{}'", id));
        }
    }
}

Problem resolve_problem(std::string_view id, std::optional<std::size_t> dim) {
    if (auto b = parse_benchmark(id)) {
        if (benchmark_info(*b).fixed_dim) {
            dim.reset();
        }
        return make_benchmark(*b, dim);
    }
    if (is_engineering_id(id)) {
        return as_penalized_problem(make_engineering_problem(id));
    }
    throw ConfigError(fmt::format("unknown problem id '{}'", id));
}

std::vector<ResultRow> run_campaign(const ExperimentSpec& spec) {
    spec.validate();
    const auto problems = resolve_all(spec);
    if (spec.write_traces) {
        fs::create_directories(spec.output_dir);
    }

    std::vector<Cell> cells;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        for (auto algo : spec.algorithms) {
            for (std::size_t r = 0; r < spec.runs; ++r) {
                cells.push_back({p, algo, spec.n_agents, spec.max_iter, r, spec.root_seed + r});
            }
        }
    }

    std::function<void(const Cell&, const RunRecord&)> on_done;
    if (spec.write_traces) {
        on_done = [&](const Cell& c, const RunRecord& rec) {
            write_trace(spec.output_dir, spec.problems[c.problem], c.algorithm, c.run, rec);
        };
    }
    const auto records = execute(problems, cells, spec.threads, on_done);

    std::vector<ResultRow> rows;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        rows.push_back({spec.problems[c.problem], c.algorithm, c.run, c.seed, records[i].best_fit,
                        records[i].elapsed_seconds});
    }
    return rows;
}

std::vector<SummaryRow> summarize_results(const std::vector<ResultRow>& rows) {
    // Keep first-appearance order of (problem, algorithm) pairs.
    std::vector<std::pair<std::string, AlgorithmId>> order;
    const auto groups = group_rows(rows);
    for (const auto& r : rows) {
        const std::pair<std::string, AlgorithmId> key{r.problem, r.algorithm};
        if (std::find(order.begin(), order.end(), key) == order.end()) {
            order.push_back(key);
        }
    }
    std::vector<SummaryRow> out;
    for (const auto& key : order) {
        const auto& list = groups.at(key);
        std::vector<double> times;
        for (const auto* r : list) {
            times.push_back(r->elapsed_seconds);
        }
        out.push_back({key.first, key.second, summarize(fitness_of(list), times)});
    }
    return out;
}

void write_results(const fs::path& dir, const std::vector<ResultRow>& rows) {
    fs::create_directories(dir);
    CsvWriter results(dir / "results.csv", {"problem", "algorithm", "run", "seed", "best_fitness"});
    CsvWriter timing(dir / "timing.csv", {"problem", "algorithm", "run", "elapsed_seconds"});
    for (const auto& r : rows) {
        const std::string algo(to_string(r.algorithm));
        results.row({r.problem, algo, std::to_string(r.run), std::to_string(r.seed),
                     format_number(r.best_fitness)});
        timing.row({r.problem, algo, std::to_string(r.run), format_number(r.elapsed_seconds)});
    }
    results.close();
    timing.close();
}

std::vector<ResultRow> read_results(const fs::path& dir) {
    const CsvTable table = read_csv(dir / "results.csv");
    const std::size_t c_problem = table.column("problem");
    const std::size_t c_algo = table.column("algorithm");
    const std::size_t c_run = table.column("run");
    const std::size_t c_seed = table.column("seed");
    const std::size_t c_fit = table.column("best_fitness");

    std::vector<ResultRow> rows;
    for (const auto& f : table.rows) {
        rows.push_back({f[c_problem], algorithm_or_throw(f[c_algo]),
                        static_cast<std::size_t>(parse_uint(f[c_run])), parse_uint(f[c_seed]),
                        parse_double(f[c_fit]), 0.0});
    }

    if (fs::exists(dir / "timing.csv")) {
        const CsvTable timing = read_csv(dir / "timing.csv");
        const std::size_t t_problem = timing.column("problem");
        const std::size_t t_algo = timing.column("algorithm");
        const std::size_t t_run = timing.column("run");
        const std::size_t t_elapsed = timing.column("elapsed_seconds");
        std::map<std::tuple<std::string, std::string, std::string>, double> elapsed;
        for (const auto& f : timing.rows) {
            elapsed[{f[t_problem], f[t_algo], f[t_run]}] = parse_double(f[t_elapsed]);
        }
        for (auto& r : rows) {
            const auto it = elapsed.find(
                {r.problem, std::string(to_string(r.algorithm)), std::to_string(r.run)});
            if (it != elapsed.end()) {
                r.elapsed_seconds = it->second;
            }
        }
    }
    return rows;
}

void write_summary(const fs::path& path, const std::vector<SummaryRow>& rows) {
    CsvWriter out(path,
                  {"problem", "algorithm", "runs", "best", "worst", "mean", "std", "mean_time_seconds"});
    for (const auto& r : rows) {
        out.row({r.problem, std::string(to_string(r.algorithm)), std::to_string(r.stats.m),
                 format_number(r.stats.best), format_number(r.stats.worst),
                 format_number(r.stats.mean), format_number(r.stats.std),
                 format_number(r.stats.mean_time_seconds)});
    }
    out.close();
}

void write_manifest(const ExperimentSpec& spec, std::string_view command) {
    fs::create_directories(spec.output_dir);
    std::ofstream out(spec.output_dir / "manifest.txt", std::ios::trunc);
    out << "tool_version=" << kToolVersion << '\n'
        << "command=" << command << '\n'
        << "problems=" << join(spec.problems, ",") << '\n'
        << "algorithms=" << join(algorithm_names(spec.algorithms), ",") << '\n'
        << "runs=" << spec.runs << '\n'
        << "agents=" << spec.n_agents << '\n'
        << "iters=" << spec.max_iter << '\n'
        << "seed=" << spec.root_seed << '\n'
        << "dim=" << (spec.dim ? std::to_string(*spec.dim) : std::string("default")) << '\n'
        << "threads=" << spec.threads << '\n';
    if (!out) {
        throw std::runtime_error("error writing manifest.txt");
    }
}

std::vector<ResultRow> cmd_bench(const ExperimentSpec& spec) {
    auto rows = run_campaign(spec);
    write_results(spec.output_dir, rows);
    write_summary(spec.output_dir / "summary.csv", summarize_results(rows));
    write_manifest(spec, "bench");
    return rows;
}

CompareOutput cmd_compare(const ExperimentSpec& spec, const std::optional<fs::path>& printed_path) {
    spec.validate();
    if (std::find(spec.algorithms.begin(), spec.algorithms.end(), AlgorithmId::dsa) ==
        spec.algorithms.end()) {
        throw ConfigError("compare needs dsa among the algorithms");
    }
    if (spec.algorithms.size() < 2) {
        throw ConfigError("compare needs at least two algorithms");
    }
    const auto rows = load_or_bench(spec);
    const auto groups = group_rows(rows);

    CompareOutput result;
    result.problems = spec.problems;
    result.algorithms = spec.algorithms;

    ResultTensor tensor;
    for (const auto& problem : spec.problems) {
        const auto dsa = fitness_of(require_group(groups, problem, AlgorithmId::dsa, spec.runs));
        std::vector<std::vector<double>> per_algo;
        for (auto algo : spec.algorithms) {
            const auto values = fitness_of(require_group(groups, problem, algo, spec.runs));
            if (algo != AlgorithmId::dsa) {
                result.wilcoxon.push_back({problem, algo, wilcoxon_rank_sum(values, dsa)});
            }
            per_algo.push_back(values);
        }
        tensor.push_back(std::move(per_algo));
    }
    result.friedman = friedman(tensor);

    CsvWriter wil(spec.output_dir / "wilcoxon.csv",
                  {"problem", "algorithm", "versus", "p_value", "h", "z_value", "identical", "exact"});
    for (const auto& w : result.wilcoxon) {
        wil.row({w.problem, std::string(to_string(w.algorithm)), "dsa",
                 format_number(w.result.p_value), std::to_string(w.result.h),
                 format_number(w.result.z_value), w.result.identical ? "1" : "0",
                 w.result.exact ? "1" : "0"});
    }
    wil.close();

    std::vector<std::string> header{"row"};
    for (auto a : spec.algorithms) {
        header.emplace_back(to_string(a));
    }
    CsvWriter fr(spec.output_dir / "friedman.csv", header);
    const auto numeric_row = [&](std::string label, const std::vector<double>& values) {
        std::vector<std::string> fields{std::move(label)};
        for (double v : values) {
            fields.push_back(format_number(v));
        }
        fr.row(fields);
    };
    for (std::size_t f = 0; f < spec.problems.size(); ++f) {
        numeric_row(spec.problems[f], result.friedman.per_function_mean_ranks[f]);
    }
    numeric_row("total", result.friedman.totals);
    numeric_row("average", result.friedman.averages);
    std::vector<std::string> rank_row{"rank"};
    for (int r : result.friedman.final_rank) {
        rank_row.push_back(std::to_string(r));
    }
    fr.row(rank_row);
    fr.close();

    if (printed_path) {
        const CsvTable printed = read_csv(*printed_path);
        const std::size_t c_problem = printed.column("problem");
        const std::size_t c_stat = printed.column("statistic");
        const std::size_t c_algo = printed.column("algorithm");
        const std::size_t c_value = printed.column("value");
        CsvWriter out(spec.output_dir / "printed_comparison.csv",
                      {"source", "problem", "statistic", "algorithm", "value"});
        for (const auto& f : printed.rows) {
            if (std::find(spec.problems.begin(), spec.problems.end(), f[c_problem]) ==
                spec.problems.end()) {
                continue;
            }
            out.row({"printed", f[c_problem], f[c_stat], f[c_algo],
                     format_number(parse_double(f[c_value]))});
        }
        for (const auto& problem : spec.problems) {
            for (auto algo : spec.algorithms) {
                const auto& list = require_group(groups, problem, algo, spec.runs);
                std::vector<double> times;
                for (const auto* r : list) {
                    times.push_back(r->elapsed_seconds);
                }
                const auto s = summarize(fitness_of(list), times);
                const std::string name(to_string(algo));
                out.row({"live", problem, "best", name, format_number(s.best)});
                out.row({"live", problem, "mean", name, format_number(s.mean)});
                out.row({"live", problem, "std", name, format_number(s.std)});
                out.row({"live", problem, "time", name, format_number(s.mean_time_seconds)});
            }
        }
        out.close();
    }
    write_manifest(spec, "compare");
    return result;
}

std::vector<EngineerSummary> cmd_engineer(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<ConstrainedProblem> constrained;
    for (const auto& id : spec.problems) {
        if (!is_engineering_id(id)) {
            throw ConfigError(fmt::format("'{}' is not an engineering problem id", id));
        }
        constrained.push_back(make_engineering_problem(id));
    }
    std::vector<Problem> problems;
    for (const auto& cp : constrained) {
        problems.push_back(as_penalized_problem(cp));
    }

    std::vector<Cell> cells;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        for (auto algo : spec.algorithms) {
            for (std::size_t r = 0; r < spec.runs; ++r) {
                cells.push_back({p, algo, spec.n_agents, spec.max_iter, r, spec.root_seed + r});
            }
        }
    }
    const auto records = execute(problems, cells, spec.threads, {});

    fs::create_directories(spec.output_dir);
    std::vector<EngineerSummary> out;
    std::size_t i = 0;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        const auto& cp = constrained[p];
        const auto& id = spec.problems[p];
        for (auto algo : spec.algorithms) {
            const std::string algo_name(to_string(algo));
            std::vector<std::string> header{"run", "seed", "penalized", "objective", "max_violation"};
            header.insert(header.end(), cp.variable_names.begin(), cp.variable_names.end());
            CsvWriter runs(spec.output_dir / fmt::format("engineer_{}_{}_runs.csv", id, algo_name),
                           header);
            std::vector<double> fits;
            std::vector<double> times;
            const RunRecord* best = nullptr;
            for (std::size_t r = 0; r < spec.runs; ++r, ++i) {
                const RunRecord& rec = records[i];
                fits.push_back(rec.best_fit);
                times.push_back(rec.elapsed_seconds);
                if (best == nullptr || rec.best_fit < best->best_fit) {
                    best = &rec;
                }
                std::vector<std::string> fields{std::to_string(r), std::to_string(rec.seed),
                                                format_number(rec.best_fit),
                                                format_number(cp.objective(rec.best_pos)),
                                                format_number(cp.max_violation(rec.best_pos))};
                for (double v : rec.best_pos) {
                    fields.push_back(format_number(v));
                }
                runs.row(fields);
            }
            runs.close();

            EngineerSummary s;
            s.problem = id;
            s.algorithm = algo;
            s.stats = summarize(fits, times);
            s.best_position = best->best_pos;
            s.best_objective = cp.objective(best->best_pos);
            s.best_constraints = cp.constraint_values(best->best_pos);
            s.best_max_violation = cp.max_violation(best->best_pos);

            CsvWriter bestf(spec.output_dir / fmt::format("engineer_{}_{}_best.csv", id, algo_name),
                            {"name", "value"});
            for (std::size_t j = 0; j < s.best_position.size(); ++j) {
                bestf.row({cp.variable_names[j], format_number(s.best_position[j])});
            }
            bestf.row({"objective", format_number(s.best_objective)});
            for (std::size_t g = 0; g < s.best_constraints.size(); ++g) {
                bestf.row({fmt::format("g{}", g + 1), format_number(s.best_constraints[g])});
            }
            bestf.close();
            out.push_back(std::move(s));
        }
    }

    CsvWriter summary(spec.output_dir / "engineer_summary.csv",
                      {"problem", "algorithm", "runs", "best", "worst", "mean", "std",
                       "mean_time_seconds", "best_objective", "best_max_violation"});
    for (const auto& s : out) {
        summary.row({s.problem, std::string(to_string(s.algorithm)), std::to_string(s.stats.m),
                     format_number(s.stats.best), format_number(s.stats.worst),
                     format_number(s.stats.mean), format_number(s.stats.std),
                     format_number(s.stats.mean_time_seconds), format_number(s.best_objective),
                     format_number(s.best_max_violation)});
    }
    summary.close();
    write_manifest(spec, "engineer");
    return out;
}

SensitivityOutput cmd_sensitivity(const ExperimentSpec& spec, const SensitivityGrid& grid) {
    spec.validate();
    if (grid.agent_counts.empty() || grid.iteration_counts.empty()) {
        throw ConfigError("sensitivity grid lists must not be empty");
    }
    for (std::size_t n : grid.agent_counts) {
        if (n < 3) {
            throw ConfigError(fmt::format("agents must be at least 3, got {}", n));
        }
    }
    if (grid.agents_for_iteration_sweep < 3) {
        throw ConfigError("agents for the iteration sweep must be at least 3");
    }
    if (grid.iterations_for_agent_sweep == 0 ||
        std::find(grid.iteration_counts.begin(), grid.iteration_counts.end(), 0) !=
            grid.iteration_counts.end()) {
        throw ConfigError("iteration counts must be positive");
    }
    const auto problems = resolve_all(spec);

    // Sweep cells: (n, T) pairs, agents sweep first.
    std::vector<std::pair<std::size_t, std::size_t>> settings;
    for (std::size_t n : grid.agent_counts) {
        settings.emplace_back(n, grid.iterations_for_agent_sweep);
    }
    for (std::size_t t : grid.iteration_counts) {
        settings.emplace_back(grid.agents_for_iteration_sweep, t);
    }

    std::vector<Cell> cells;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        for (auto algo : spec.algorithms) {
            for (const auto& [n, t] : settings) {
                for (std::size_t r = 0; r < spec.runs; ++r) {
                    cells.push_back({p, algo, n, t, r, spec.root_seed + r});
                }
            }
        }
    }
    const auto records = execute(problems, cells, spec.threads, {});

    SensitivityOutput out;
    std::size_t i = 0;
    for (std::size_t p = 0; p < problems.size(); ++p) {
        for (auto algo : spec.algorithms) {
            for (std::size_t s = 0; s < settings.size(); ++s) {
                std::vector<double> fits;
                std::vector<double> times;
                for (std::size_t r = 0; r < spec.runs; ++r, ++i) {
                    fits.push_back(records[i].best_fit);
                    times.push_back(records[i].elapsed_seconds);
                }
                const auto stats = summarize(fits, times);
                SensitivityCell cell{spec.problems[p], algo, settings[s].first, settings[s].second,
                                     stats.mean, stats.std};
                (s < grid.agent_counts.size() ? out.by_agents : out.by_iterations).push_back(cell);
            }
        }
    }

    fs::create_directories(spec.output_dir);
    const auto write = [&](const fs::path& path, const std::vector<SensitivityCell>& cells_out) {
        CsvWriter w(path, {"problem", "algorithm", "agents", "iters", "mean", "std"});
        for (const auto& c : cells_out) {
            w.row({c.problem, std::string(to_string(c.algorithm)), std::to_string(c.n_agents),
                   std::to_string(c.max_iter), format_number(c.mean), format_number(c.std)});
        }
        w.close();
    };
    write(spec.output_dir / "sensitivity_agents.csv", out.by_agents);
    write(spec.output_dir / "sensitivity_iters.csv", out.by_iterations);
    write_manifest(spec, "sensitivity");
    return out;
}

std::vector<BoxRow> cmd_boxplot(const ExperimentSpec& spec) {
    spec.validate();
    const auto rows = load_or_bench(spec);
    const auto groups = group_rows(rows);

    std::vector<BoxRow> out;
    CsvWriter w(spec.output_dir / "boxplot.csv",
                {"problem", "algorithm", "min", "q1", "median", "q3", "max", "values"});
    for (const auto& problem : spec.problems) {
        for (auto algo : spec.algorithms) {
            BoxRow row{problem, algo, {}, fitness_of(require_group(groups, problem, algo, spec.runs))};
            row.box = box_stats(row.values);
            std::vector<std::string> raw;
            for (double v : row.values) {
                raw.push_back(format_number(v));
            }
            w.row({problem, std::string(to_string(algo)), format_number(row.box.min),
                   format_number(row.box.q1), format_number(row.box.median),
                   format_number(row.box.q3), format_number(row.box.max), join(raw, ";")});
            out.push_back(std::move(row));
        }
    }
    w.close();
    write_manifest(spec, "boxplot");
    return out;
}

fs::path default_printed_results() { return fs::path(DUCKSWARM_DATA_DIR) / "printed_results.csv"; }

}  // namespace duckswarm
