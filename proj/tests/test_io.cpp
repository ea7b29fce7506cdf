#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "pp/errors.hpp"
#include "pp/io.hpp"

using namespace pp;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("pp_io_test_" + std::to_string(std::rand()) + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("graph files round-trip") {
    TempDir dir;
    CouplingGraph g(4, {{1, 2}, {2, 3}, {1, 4}});
    save_graph(g, dir.path / "g.json");
    CouplingGraph loaded = load_graph(dir.path / "g.json");
    CHECK(loaded == g);

    CouplingDag d(3, {{1, 2}, {3, 2}});
    save_dag(d, dir.path / "d.json");
    CouplingDag dl = load_dag(dir.path / "d.json");
    CHECK(dl.arcs() == d.arcs());
    CHECK(dl.n_vertices() == 3);
}

TEST_CASE("malformed graph files raise input errors") {
    TempDir dir;
    CHECK_THROWS_AS(load_graph(dir.path / "missing.json"), InputError);

    std::ofstream(dir.path / "bad.json") << "{not json";
    CHECK_THROWS_AS(load_graph(dir.path / "bad.json"), InputError);

    std::ofstream(dir.path / "noedges.json") << R"({"n": 3})";
    CHECK_THROWS_AS(load_graph(dir.path / "noedges.json"), InputError);

    std::ofstream(dir.path / "badpair.json") << R"({"n": 3, "edges": [[1]]})";
    CHECK_THROWS_AS(load_graph(dir.path / "badpair.json"), InputError);

    std::ofstream(dir.path / "range.json") << R"({"n": 2, "edges": [[1, 5]]})";
    CHECK_THROWS_AS(load_graph(dir.path / "range.json"), InputError);
}

TEST_CASE("scenario round-trip preserves the experiment") {
    TempDir dir;
    Scenario sc = make_intersection_scenario();
    save_scenario(sc, dir.path / "sc.json");
    Scenario loaded = load_scenario(dir.path / "sc.json");
    CHECK(loaded.name == sc.name);
    CHECK(loaded.dt == sc.dt);
    CHECK(loaded.n_steps == sc.n_steps);
    CHECK(loaded.horizon == sc.horizon);
    CHECK(loaded.n_exp == sc.n_exp);
    CHECK(loaded.seed == sc.seed);
    CHECK(loaded.strategy.kind == sc.strategy.kind);
    CHECK(loaded.mpa.speed_levels == sc.mpa.speed_levels);
    CHECK(loaded.mpa.steering_levels == sc.mpa.steering_levels);
    CHECK(loaded.mpa.vehicle.wheelbase == sc.mpa.vehicle.wheelbase);
    REQUIRE(loaded.boundaries.size() == sc.boundaries.size());
    REQUIRE(loaded.vehicles.size() == sc.vehicles.size());
    for (std::size_t i = 0; i < sc.vehicles.size(); ++i) {
        CHECK(loaded.vehicles[i].id == sc.vehicles[i].id);
        CHECK(loaded.vehicles[i].start.x == sc.vehicles[i].start.x);
        CHECK(loaded.vehicles[i].start.yaw == sc.vehicles[i].start.yaw);
        CHECK(loaded.vehicles[i].reference_speed == sc.vehicles[i].reference_speed);
        REQUIRE(loaded.vehicles[i].reference_path.size() ==
                sc.vehicles[i].reference_path.size());
        for (std::size_t k = 0; k < sc.vehicles[i].reference_path.size(); ++k) {
            CHECK(loaded.vehicles[i].reference_path[k].x == sc.vehicles[i].reference_path[k].x);
            CHECK(loaded.vehicles[i].reference_path[k].y == sc.vehicles[i].reference_path[k].y);
        }
    }
    CHECK_THROWS_AS(load_scenario(dir.path / "nope.json"), InputError);
}

TEST_CASE("serializers are stable") {
    Coloring c{{{1, 1}, {2, 2}}, 2};
    CHECK(serialize_coloring(c) == serialize_coloring(c));
    CHECK(serialize_coloring(c).find("\"n_colors\": 2") != std::string::npos);
    PriorityAssignment p{{{1, 2}, {2, 1}}};
    CHECK(serialize_priorities(p).find("\"2\": 1") != std::string::npos);
}

TEST_CASE("histogram csv") {
    std::map<int, std::uint64_t> h{{2, 4}, {3, 2}};
    CHECK(histogram_csv(h) == std::string(kHistogramCsvHeader) + "\n2,4\n3,2\n");
}

TEST_CASE("csv headers match the published schema") {
    CHECK(std::string(kStepCsvHeader) ==
          "step,strategy,n_vertices,n_edges,n_levels,t_ncs_modeled_ms,t_ncs_measured_ms,"
          "cost_step,infeasible_agents");
    CHECK(std::string(kAgentCsvHeader) ==
          "step,strategy,agent,priority,level,cost,solve_ms,infeasible");
}

TEST_CASE("step and agent csv formatting") {
    Scenario sc = make_intersection_scenario();
    sc.n_steps = 1;
    sc.n_exp = 50;
    ExperimentResult r = Simulator::run_experiment(sc);
    std::string steps = step_csv(r, "coloring");
    CHECK(steps.rfind(kStepCsvHeader, 0) == 0);
    CHECK(steps.find("0,coloring,8,") != std::string::npos);
    std::string agents = agent_csv(r, "coloring");
    CHECK(agents.rfind(kAgentCsvHeader, 0) == 0);
    // 8 agents + header + trailing newline
    CHECK(std::count(agents.begin(), agents.end(), '\n') == 9);
}

TEST_CASE("mpa serialization writes all primitives") {
    TempDir dir;
    MpaConfig cfg;
    cfg.speed_levels = {0.0, 0.35};
    cfg.steering_levels = {0.0};
    MotionPrimitiveAutomaton mpa = build_mpa(cfg);
    save_mpa(mpa, dir.path / "mpa.json");
    std::ifstream in(dir.path / "mpa.json");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text.find("\"primitives\"") != std::string::npos);
    CHECK(text.find("\"speed_levels\"") != std::string::npos);
}
