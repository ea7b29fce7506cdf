#pragma once

#include <filesystem>
#include <string>

#include "pp/coloring.hpp"
#include "pp/scenario.hpp"
#include "pp/simulator.hpp"

namespace pp {

// Graph files: JSON with "n" and "edges" (undirected) or "arcs" (directed),
// ids 1-based.
CouplingGraph load_graph(const std::filesystem::path& path);
CouplingDag load_dag(const std::filesystem::path& path);
void save_graph(const CouplingGraph& g, const std::filesystem::path& path);
void save_dag(const CouplingDag& d, const std::filesystem::path& path);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& sc, const std::filesystem::path& path);

std::string serialize_coloring(const Coloring& c);
std::string serialize_priorities(const PriorityAssignment& p);

void save_mpa(const MotionPrimitiveAutomaton& mpa, const std::filesystem::path& path);

// CSV schema versions, checked by tests.
inline constexpr const char* kStepCsvHeader =
    "step,strategy,n_vertices,n_edges,n_levels,t_ncs_modeled_ms,t_ncs_measured_ms,"
    "cost_step,infeasible_agents";
inline constexpr const char* kAgentCsvHeader =
    "step,strategy,agent,priority,level,cost,solve_ms,infeasible";
inline constexpr const char* kCompareCsvHeader =
    "strategy,max_levels,median_levels,max_t_ncs_modeled_ms,median_t_ncs_modeled_ms,"
    "max_t_ncs_measured_ms,median_t_ncs_measured_ms,total_cost,normalized_cost,"
    "infeasible_total,executed_collisions";
inline constexpr const char* kHistogramCsvHeader = "n_levels,count";

std::string step_csv(const ExperimentResult& result, const std::string& strategy);
std::string agent_csv(const ExperimentResult& result, const std::string& strategy);
std::string histogram_csv(const std::map<int, std::uint64_t>& histogram);

struct RunManifest {
    std::string command;
    std::string config_path;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::string tool_version;
    std::string timestamp;
};

void write_manifest(const RunManifest& m, const std::filesystem::path& path);

} // namespace pp
