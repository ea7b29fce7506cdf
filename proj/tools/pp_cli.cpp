#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pp/errors.hpp"
#include "pp/io.hpp"
#include "pp/simulator.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw pp::InputError("cannot write " + path.string());
    out << text;
}

void emit_manifest(const std::string& command, const std::string& config, std::uint64_t seed,
                   const fs::path& out_dir) {
    pp::write_manifest({command, config, seed, out_dir.string(), kVersion, timestamp_now()},
                       out_dir / "manifest.json");
}

ordered_json summary_json(const pp::ExperimentSummary& s) {
    ordered_json j;
    j["total_cost"] = s.total_cost;
    j["max_levels"] = s.max_levels;
    j["median_levels"] = s.median_levels;
    j["max_t_ncs_modeled_ms"] = s.max_tncs_modeled.ms();
    j["median_t_ncs_modeled_ms"] = s.median_tncs_modeled.ms();
    j["max_t_ncs_measured_ms"] = s.max_tncs_measured_ms;
    j["median_t_ncs_measured_ms"] = s.median_tncs_measured_ms;
    j["infeasible_total"] = s.infeasible_total;
    j["executed_collisions"] = s.executed_collisions;
    j["all_consistent"] = s.all_consistent;
    j["final_distance_to_goal"] = s.final_distance_to_goal;
    return j;
}

void run_color(const std::string& graph_file, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    pp::CouplingGraph g = pp::load_graph(graph_file);
    pp::Coloring c = pp::greedy_color(g);
    pp::PriorityAssignment p = pp::color_to_priority(c);
    pp::CouplingDag d = pp::orient_edges(g, p);
    pp::LevelAssignment levels = pp::compute_levels(d);

    write_file(out_dir / "coloring.json", pp::serialize_coloring(c));
    write_file(out_dir / "priority.json", pp::serialize_priorities(p));
    pp::save_dag(d, out_dir / "dag.json");
    ordered_json lj;
    lj["n_levels"] = levels.n_levels;
    for (const auto& [i, lvl] : levels.level) lj["level"][std::to_string(i)] = lvl;
    write_file(out_dir / "levels.json", lj.dump(2) + "\n");
    emit_manifest("color", graph_file, 0, out_dir);

    std::cout << "n_colors=" << c.n_colors << " n_levels=" << levels.n_levels
              << " equal=" << (c.n_colors == levels.n_levels ? "yes" : "no") << "\n";
}

void run_enumerate(const std::string& graph_file, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    pp::CouplingGraph g = pp::load_graph(graph_file);
    auto histogram = pp::enumerate_prioritizations(g);
    write_file(out_dir / "histogram.csv", pp::histogram_csv(histogram));
    emit_manifest("enumerate", graph_file, 0, out_dir);
    std::uint64_t total = 0;
    for (const auto& [levels, count] : histogram) total += count;
    std::cout << "prioritizations=" << total << " min_levels=" << histogram.begin()->first
              << " max_levels=" << histogram.rbegin()->first << "\n";
}

struct SimOverrides {
    std::string strategy;
    std::int64_t seed = -1;
    int steps = -1;
    int n_exp = -1;
};

pp::Scenario load_with_overrides(const std::string& scenario_file, const SimOverrides& o) {
    pp::Scenario sc = pp::load_scenario(scenario_file);
    if (!o.strategy.empty()) {
        auto kind = pp::strategy_from_name(o.strategy);
        if (!kind) throw pp::InputError("unknown strategy: " + o.strategy);
        sc.strategy.kind = *kind;
    }
    if (o.seed >= 0) sc.seed = static_cast<std::uint64_t>(o.seed);
    if (o.steps >= 0) sc.n_steps = o.steps;
    if (o.n_exp > 0) sc.n_exp = o.n_exp;
    return sc;
}

void run_simulate(const std::string& scenario_file, const SimOverrides& o,
                  const fs::path& out_dir) {
    fs::create_directories(out_dir);
    pp::Scenario sc = load_with_overrides(scenario_file, o);
    pp::ExperimentResult result = pp::Simulator::run_experiment(sc);
    const std::string name = pp::strategy_name(sc.strategy.kind);
    write_file(out_dir / "steps.csv", pp::step_csv(result, name));
    write_file(out_dir / "agents.csv", pp::agent_csv(result, name));
    write_file(out_dir / "summary.json", summary_json(result.summary).dump(2) + "\n");
    emit_manifest("simulate", scenario_file, sc.seed, out_dir);
    std::cout << "strategy=" << name << " steps=" << sc.n_steps
              << " total_cost=" << result.summary.total_cost
              << " max_levels=" << result.summary.max_levels
              << " infeasible=" << result.summary.infeasible_total
              << " collisions=" << result.summary.executed_collisions << "\n";
}

void run_compare(const std::string& scenario_file, const SimOverrides& o,
                 const fs::path& out_dir) {
    fs::create_directories(out_dir);
    pp::Scenario sc = load_with_overrides(scenario_file, o);
    const pp::StrategyKind kinds[] = {pp::StrategyKind::Constant, pp::StrategyKind::Random,
                                      pp::StrategyKind::ConstraintBased,
                                      pp::StrategyKind::Coloring};
    std::ostringstream csv;
    csv << pp::kCompareCsvHeader << "\n";
    double constant_cost = 0.0;
    for (pp::StrategyKind kind : kinds) {
        pp::Scenario run = sc;
        run.strategy.kind = kind;
        pp::ExperimentResult result = pp::Simulator::run_experiment(run);
        const std::string name = pp::strategy_name(kind);
        write_file(out_dir / ("steps_" + name + ".csv"), pp::step_csv(result, name));
        const pp::ExperimentSummary& s = result.summary;
        if (kind == pp::StrategyKind::Constant) constant_cost = s.total_cost;
        const double normalized = constant_cost > 0.0 ? s.total_cost / constant_cost : 1.0;
        char norm[32];
        std::snprintf(norm, sizeof(norm), "%.6f", normalized);
        csv << name << ',' << s.max_levels << ',' << s.median_levels << ','
            << s.max_tncs_modeled.ms() << ',' << s.median_tncs_modeled.ms() << ','
            << s.max_tncs_measured_ms << ',' << s.median_tncs_measured_ms << ','
            << s.total_cost << ',' << norm << ',' << s.infeasible_total << ','
            << s.executed_collisions << "\n";
        std::cout << name << ": max_levels=" << s.max_levels
                  << " total_cost=" << s.total_cost << " normalized=" << norm << "\n";
    }
    write_file(out_dir / "compare.csv", csv.str());
    emit_manifest("compare", scenario_file, sc.seed, out_dir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prioritized planning with graph-coloring prioritization"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string graph_file;
    std::string scenario_file;
    std::string out_dir = "pp-out";
    SimOverrides overrides;

    CLI::App* color = app.add_subcommand("color", "Color a coupling graph and derive the DAG");
    color->add_option("--graph", graph_file, "graph JSON file")->required();
    color->add_option("--out-dir", out_dir, "output directory");

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "Level histogram over all prioritizations (n <= 9)");
    enumerate->add_option("--graph", graph_file, "graph JSON file")->required();
    enumerate->add_option("--out-dir", out_dir, "output directory");

    CLI::App* simulate = app.add_subcommand("simulate", "Run a closed-loop experiment");
    simulate->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    simulate->add_option("--strategy", overrides.strategy,
                         "constant|random|constraint|coloring");
    simulate->add_option("--seed", overrides.seed, "experiment seed");
    simulate->add_option("--steps", overrides.steps, "number of time steps");
    simulate->add_option("--n-exp", overrides.n_exp, "planner expansion budget");
    simulate->add_option("--out-dir", out_dir, "output directory");

    CLI::App* compare = app.add_subcommand("compare", "Run all four strategies on one scenario");
    compare->add_option("--scenario", scenario_file, "scenario JSON file")->required();
    compare->add_option("--seed", overrides.seed, "experiment seed");
    compare->add_option("--steps", overrides.steps, "number of time steps");
    compare->add_option("--n-exp", overrides.n_exp, "planner expansion budget");
    compare->add_option("--out-dir", out_dir, "output directory");

    std::string scenario_out = "intersection8.json";
    CLI::App* init =
        app.add_subcommand("init-scenario", "Write the built-in eight-vehicle intersection");
    init->add_option("--out", scenario_out, "output scenario file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (color->parsed()) run_color(graph_file, out_dir);
        if (enumerate->parsed()) run_enumerate(graph_file, out_dir);
        if (simulate->parsed()) run_simulate(scenario_file, overrides, out_dir);
        if (compare->parsed()) run_compare(scenario_file, overrides, out_dir);
        if (init->parsed()) {
            pp::save_scenario(pp::make_intersection_scenario(), scenario_out);
            std::cout << "wrote " << scenario_out << "\n";
        }
    } catch (const pp::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const pp::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
