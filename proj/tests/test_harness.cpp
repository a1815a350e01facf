#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "duckswarm/csv.hpp"
#include "duckswarm/harness.hpp"

using namespace duckswarm;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(std::string_view name) {
    const fs::path dir = fs::temp_directory_path() / fmt::format("duckswarm_test_{}", name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t line_count(const fs::path& p) {
    std::ifstream in(p);
    std::size_t n = 0;
    std::string line;
    while (std::getline(in, line)) ++n;
    return n;
}

ExperimentSpec small_spec(std::string_view name) {
    ExperimentSpec s;
    s.problems = {"F1"};
    s.algorithms = {AlgorithmId::dsa};
    s.runs = 3;
    s.max_iter = 10;
    s.output_dir = fresh_dir(name);
    return s;
}

int cli(const std::string& args) {
    const int status = std::system(fmt::format("{} {} >/dev/null 2>&1", DUCKSWARM_CLI, args).c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void write_fake_results(const fs::path& dir, const std::vector<ResultRow>& rows) {
    write_results(dir, rows);
}

}  // namespace

TEST_CASE("csv helpers") {
    CHECK(format_number(0.1) == "1.00000000000000006e-01");
    CHECK(parse_double(format_number(0.1)) == 0.1);
    CHECK(parse_double("2.95E-133") == 2.95e-133);
    CHECK(parse_double("0") == 0.0);
    CHECK_THROWS(parse_double("1.0x"));
    CHECK_THROWS(parse_uint("-1"));
    const fs::path dir = fresh_dir("csv");
    fs::create_directories(dir);
    {
        CsvWriter w(dir / "t.csv", {"a", "b"});
        w.row({"1", "2"});
        CHECK_THROWS(w.row({"1"}));
        CHECK_THROWS(w.row({"1,2", "3"}));
        w.close();
    }
    const auto t = read_csv(dir / "t.csv");
    CHECK(t.header == std::vector<std::string>{"a", "b"});
    CHECK(t.rows.size() == 1);
    CHECK(t.column("b") == 1);
    CHECK_THROWS(t.column("c"));
}

TEST_CASE("experiment validation") {
    ExperimentSpec s = small_spec("validate");
    CHECK_NOTHROW(s.validate());
    s.problems = {"F99"};
    CHECK_THROWS_WITH_AS(s.validate(), doctest::Contains("F99"), ConfigError);
    s.problems = {"F1"};
    s.runs = 0;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    s.runs = 1;
    s.n_agents = 2;
    CHECK_THROWS_AS(s.validate(), ConfigError);
    CHECK_THROWS_AS(resolve_problem("nope"), ConfigError);
    CHECK(resolve_problem("F15", 10).space.dim() == 2);
    CHECK(resolve_problem("F3", 10).space.dim() == 10);
    CHECK(resolve_problem("srd").space.dim() == 7);
}

TEST_CASE("bench writes one row per run and full traces") {
    const auto spec = small_spec("bench");
    const auto rows = cmd_bench(spec);
    CHECK(rows.size() == 3);
    CHECK(line_count(spec.output_dir / "results.csv") == 4);
    CHECK(line_count(spec.output_dir / "summary.csv") == 2);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(rows[r].seed == spec.root_seed + r);
        CHECK(line_count(spec.output_dir / fmt::format("trace_F1_dsa_{}.csv", r)) == 11);
    }
    const auto manifest = slurp(spec.output_dir / "manifest.txt");
    CHECK(manifest.find("seed=1") != std::string::npos);
    CHECK(manifest.find(std::string(kToolVersion)) != std::string::npos);
}

TEST_CASE("rerun with the same seed is byte-identical, also when threaded") {
    auto a = small_spec("det_a");
    a.problems = {"F1", "F7", "tbtp"};
    a.algorithms = {AlgorithmId::dsa, AlgorithmId::pso};
    auto b = a;
    b.output_dir = fresh_dir("det_b");
    b.threads = 3;
    cmd_bench(a);
    cmd_bench(b);
    CHECK(slurp(a.output_dir / "results.csv") == slurp(b.output_dir / "results.csv"));
    CHECK(slurp(a.output_dir / "trace_F7_pso_2.csv") == slurp(b.output_dir / "trace_F7_pso_2.csv"));
}

TEST_CASE("results round trip reproduces the summary") {
    auto spec = small_spec("roundtrip");
    spec.algorithms = {AlgorithmId::dsa, AlgorithmId::gwo};
    const auto rows = cmd_bench(spec);
    const auto reread = read_results(spec.output_dir);
    REQUIRE(reread.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(reread[i].best_fitness == rows[i].best_fitness);
        CHECK(reread[i].elapsed_seconds == rows[i].elapsed_seconds);
    }
    write_summary(spec.output_dir / "summary2.csv", summarize_results(reread));
    CHECK(slurp(spec.output_dir / "summary.csv") == slurp(spec.output_dir / "summary2.csv"));
}

TEST_CASE("identical campaigns compare as identical") {
    auto spec = small_spec("same");
    spec.write_traces = false;
    const auto a = run_campaign(spec);
    const auto b = run_campaign(spec);
    std::vector<double> fa, fb;
    for (const auto& r : a) fa.push_back(r.best_fitness);
    for (const auto& r : b) fb.push_back(r.best_fitness);
    const auto w = wilcoxon_rank_sum(fa, fb);
    CHECK(w.identical);
    CHECK(w.h == 0);
}

TEST_CASE("compare writes wilcoxon, friedman and printed tables") {
    auto spec = small_spec("compare");
    spec.problems = {"F1", "F2"};
    spec.algorithms = {AlgorithmId::dsa, AlgorithmId::sca};
    spec.runs = 5;
    spec.max_iter = 30;
    const auto out = cmd_compare(spec, default_printed_results());
    CHECK(out.wilcoxon.size() == 2);
    for (const auto& w : out.wilcoxon) {
        CHECK(w.algorithm == AlgorithmId::sca);
        CHECK(w.result.h == 1);
        CHECK(w.result.z_value > 0.0);
    }
    CHECK(out.friedman.averages[0] == 1.0);
    CHECK(line_count(spec.output_dir / "wilcoxon.csv") == 3);
    CHECK(line_count(spec.output_dir / "friedman.csv") == 1 + 2 + 3);
    const auto printed = read_csv(spec.output_dir / "printed_comparison.csv");
    std::size_t printed_rows = 0, live_rows = 0;
    for (const auto& r : printed.rows) {
        printed_rows += r[0] == "printed";
        live_rows += r[0] == "live";
    }
    CHECK(printed_rows == 2 * 4 * 8);
    CHECK(live_rows == 2 * 2 * 4);
}

TEST_CASE("compare reuses an existing results file") {
    const auto dir = fresh_dir("reuse");
    std::vector<ResultRow> rows;
    for (std::size_t r = 0; r < 4; ++r) {
        rows.push_back({"F9", AlgorithmId::dsa, r, r + 1, 0.0, 0.0});
        rows.push_back({"F9", AlgorithmId::pso, r, r + 1, 0.0, 0.0});
    }
    write_fake_results(dir, rows);
    ExperimentSpec spec;
    spec.problems = {"F9"};
    spec.algorithms = {AlgorithmId::dsa, AlgorithmId::pso};
    spec.runs = 4;
    spec.output_dir = dir;
    const auto out = cmd_compare(spec);
    REQUIRE(out.wilcoxon.size() == 1);
    CHECK(out.wilcoxon[0].result.identical);
    CHECK(out.friedman.averages == std::vector<double>{1.5, 1.5});

    spec.runs = 5;
    CHECK_THROWS_AS(cmd_compare(spec), std::runtime_error);
    spec.algorithms = {AlgorithmId::pso, AlgorithmId::gwo};
    CHECK_THROWS_AS(cmd_compare(spec), ConfigError);
}

TEST_CASE("boxplot quantiles") {
    const auto dir = fresh_dir("box");
    std::vector<ResultRow> rows;
    for (std::size_t r = 0; r < 5; ++r) {
        rows.push_back({"F1", AlgorithmId::dsa, r, r + 1, static_cast<double>(5 - r), 0.0});
        rows.push_back({"F1", AlgorithmId::pso, r, r + 1, 2.0, 0.0});
    }
    write_fake_results(dir, rows);
    ExperimentSpec spec;
    spec.problems = {"F1"};
    spec.algorithms = {AlgorithmId::dsa, AlgorithmId::pso};
    spec.runs = 5;
    spec.output_dir = dir;
    const auto out = cmd_boxplot(spec);
    REQUIRE(out.size() == 2);
    CHECK(out[0].box.median == 3.0);
    CHECK(out[0].box.q1 == 2.0);
    CHECK(out[0].box.q3 == 4.0);
    CHECK(out[1].box.min == out[1].box.max);
    const auto table = read_csv(dir / "boxplot.csv");
    CHECK(table.rows.size() == 2);
    CHECK(std::count(table.rows[0].back().begin(), table.rows[0].back().end(), ';') == 4);
}

TEST_CASE("engineer reports best vectors and constraints") {
    auto spec = small_spec("engineer");
    spec.problems = {"tbtp", "sop"};
    spec.runs = 2;
    spec.max_iter = 50;
    const auto out = cmd_engineer(spec);
    REQUIRE(out.size() == 2);
    CHECK(out[0].best_position.size() == 2);
    CHECK(out[0].best_constraints.size() == 3);
    CHECK(out[1].best_constraints.size() == 5);
    CHECK(out[0].stats.best <= out[0].stats.worst);
    CHECK(fs::exists(spec.output_dir / "engineer_tbtp_dsa_best.csv"));
    CHECK(line_count(spec.output_dir / "engineer_sop_dsa_runs.csv") == 3);
    CHECK(line_count(spec.output_dir / "engineer_summary.csv") == 3);
    spec.problems = {"F1"};
    CHECK_THROWS_AS(cmd_engineer(spec), ConfigError);
}

TEST_CASE("a single-cell sensitivity sweep matches bench") {
    auto spec = small_spec("sens");
    spec.problems = {"F2"};
    spec.n_agents = 10;
    spec.max_iter = 20;
    spec.write_traces = false;
    const auto bench_rows = run_campaign(spec);
    const auto bench_summary = summarize_results(bench_rows);
    SensitivityGrid grid{{10}, 20, {20}, 10};
    const auto out = cmd_sensitivity(spec, grid);
    REQUIRE(out.by_agents.size() == 1);
    REQUIRE(out.by_iterations.size() == 1);
    CHECK(out.by_agents[0].mean == bench_summary[0].stats.mean);
    CHECK(out.by_iterations[0].std == bench_summary[0].stats.std);
    CHECK(line_count(spec.output_dir / "sensitivity_agents.csv") == 2);
    grid.agent_counts = {2};
    CHECK_THROWS_AS(cmd_sensitivity(spec, grid), ConfigError);
}

TEST_CASE("cli exit codes and config precedence") {
    const auto dir = fresh_dir("cli");
    fs::create_directories(dir);
    const std::string out = (dir / "ok").string();
    CHECK(cli(fmt::format("bench --problems F1 --algos dsa --runs 2 --iters 5 --out {}", out)) == 0);
    CHECK(line_count(fs::path(out) / "results.csv") == 3);
    CHECK(cli("bench --problems F99 --out " + (dir / "bad").string()) == 2);
    CHECK(cli("bench --algos nope --out " + (dir / "bad").string()) == 2);
    CHECK(cli("bench --runs abc") == 2);
    CHECK(cli("frobnicate") == 2);
    CHECK(cli("--help") == 0);

    // Output directory under a regular file cannot be created.
    std::ofstream(dir / "file") << "x";
    CHECK(cli(fmt::format("bench --problems F1 --runs 1 --iters 2 --out {}",
                          (dir / "file" / "sub").string())) == 1);

    std::ofstream(dir / "cfg.ini") << "problems=F2\nalgos=dsa\nruns=4\niters=3\n";
    const std::string out2 = (dir / "cfg").string();
    CHECK(cli(fmt::format("bench --config {} --runs 2 --out {}", (dir / "cfg.ini").string(), out2)) == 0);
    const auto t = read_csv(fs::path(out2) / "results.csv");
    CHECK(t.rows.size() == 2);
    CHECK(t.rows[0][0] == "F2");
}
