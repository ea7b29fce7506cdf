#include "pp/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pp/errors.hpp"

namespace pp {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path.string());
    out << text;
}

std::vector<std::pair<VertexId, VertexId>> parse_pairs(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw InputError(std::string("graph file needs an array field '") + field + "'");
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& e : j[field]) {
        if (!e.is_array() || e.size() != 2)
            throw InputError("each entry must be a two-element integer list");
        out.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return out;
}

int parse_n(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("graph file needs an integer field 'n'");
    return j["n"].get<int>();
}

ordered_json polygon_to_json(const ConvexPolygon& p) {
    ordered_json out = ordered_json::array();
    for (const Vec2& v : p.points) out.push_back({v.x, v.y});
    return out;
}

ConvexPolygon polygon_from_json(const json& j) {
    ConvexPolygon p;
    for (const auto& e : j) p.points.push_back({e[0].get<double>(), e[1].get<double>()});
    return p;
}

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", ms);
    return buf;
}

} // namespace

CouplingGraph load_graph(const std::filesystem::path& path) {
    json j = read_json(path);
    try {
        return CouplingGraph(parse_n(j), parse_pairs(j, "edges"));
    } catch (const json::exception& e) {
        throw InputError("malformed graph file: " + std::string(e.what()));
    }
}

CouplingDag load_dag(const std::filesystem::path& path) {
    json j = read_json(path);
    try {
        return CouplingDag(parse_n(j), parse_pairs(j, "arcs"));
    } catch (const json::exception& e) {
        throw InputError("malformed graph file: " + std::string(e.what()));
    }
}

void save_graph(const CouplingGraph& g, const std::filesystem::path& path) {
    ordered_json j;
    j["n"] = g.n_vertices();
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    write_text(path, j.dump(2) + "\n");
}

void save_dag(const CouplingDag& d, const std::filesystem::path& path) {
    ordered_json j;
    j["n"] = d.n_vertices();
    j["arcs"] = json::array();
    for (const auto& [a, b] : d.arcs()) j["arcs"].push_back({a, b});
    write_text(path, j.dump(2) + "\n");
}

std::string serialize_coloring(const Coloring& c) {
    ordered_json j;
    j["n_colors"] = c.n_colors;
    ordered_json colors = ordered_json::object();
    for (const auto& [i, col] : c.color) colors[std::to_string(i)] = col;
    j["color"] = std::move(colors);
    return j.dump(2) + "\n";
}

std::string serialize_priorities(const PriorityAssignment& p) {
    ordered_json j = ordered_json::object();
    for (const auto& [i, prio] : p.priority) j[std::to_string(i)] = prio;
    return j.dump(2) + "\n";
}

void save_mpa(const MotionPrimitiveAutomaton& mpa, const std::filesystem::path& path) {
    ordered_json j;
    j["speed_levels"] = mpa.config().speed_levels;
    j["steering_levels"] = mpa.config().steering_levels;
    j["dt"] = mpa.config().dt;
    j["states"] = json::array();
    for (const MpaState& s : mpa.states())
        j["states"].push_back({{"speed_idx", s.speed_idx}, {"steer_idx", s.steer_idx}});
    j["primitives"] = json::array();
    for (const MotionPrimitive& prim : mpa.primitives()) {
        json samples = json::array();
        for (const VehicleState& s : prim.samples)
            samples.push_back({s.x, s.y, s.yaw, s.speed});
        j["primitives"].push_back({{"from", prim.from_state},
                                   {"to", prim.to_state},
                                   {"steering", prim.input.steering},
                                   {"acceleration", prim.input.acceleration},
                                   {"samples", std::move(samples)}});
    }
    write_text(path, j.dump(2) + "\n");
}

Scenario load_scenario(const std::filesystem::path& path) {
    json j = read_json(path);
    try {
        Scenario sc;
        sc.name = j.value("name", std::string("scenario"));
        sc.dt = j.at("dt").get<double>();
        sc.n_steps = j.at("n_steps").get<int>();
        sc.horizon = j.at("horizon").get<int>();
        sc.n_exp = j.at("n_exp").get<int>();
        sc.seed = j.value("seed", 0ull);
        if (j.contains("strategy")) {
            auto kind = strategy_from_name(j["strategy"].get<std::string>());
            if (!kind) throw InputError("unknown strategy in scenario file");
            sc.strategy.kind = *kind;
        }
        sc.planning_time_ms = j.value("planning_time_ms", 50.0);
        sc.prioritization_time_ms = j.value("prioritization_time_ms", 0.81);
        sc.speed_weight = j.value("speed_weight", 0.1);

        const json& m = j.at("mpa");
        sc.mpa.speed_levels = m.at("speed_levels").get<std::vector<double>>();
        sc.mpa.steering_levels = m.at("steering_levels").get<std::vector<double>>();
        sc.mpa.dt = sc.dt;
        sc.mpa.max_speed_change = m.at("max_speed_change").get<double>();
        sc.mpa.max_steering_change = m.at("max_steering_change").get<double>();
        sc.mpa.n_samples = m.value("n_samples", 6);
        const json& v = j.at("vehicle");
        sc.mpa.vehicle.wheelbase = v.at("wheelbase").get<double>();
        sc.mpa.vehicle.max_speed = v.at("max_speed").get<double>();
        sc.mpa.vehicle.max_steering = v.at("max_steering").get<double>();
        sc.mpa.vehicle.max_acceleration = v.at("max_acceleration").get<double>();
        sc.mpa.vehicle.body_length = v.at("body_length").get<double>();
        sc.mpa.vehicle.body_width = v.at("body_width").get<double>();

        for (const auto& b : j.value("boundaries", json::array()))
            sc.boundaries.push_back(polygon_from_json(b));

        for (const auto& vj : j.at("vehicles")) {
            VehicleSpec spec;
            spec.id = vj.at("id").get<int>();
            spec.start = {vj.at("start").at("x").get<double>(), vj.at("start").at("y").get<double>(),
                          vj.at("start").at("yaw").get<double>(),
                          vj.at("start").at("speed").get<double>()};
            spec.start_steering = vj.value("start_steering", 0.0);
            for (const auto& p : vj.at("path"))
                spec.reference_path.push_back({p[0].get<double>(), p[1].get<double>()});
            spec.reference_speed = vj.at("reference_speed").get<double>();
            sc.vehicles.push_back(std::move(spec));
        }
        return sc;
    } catch (const json::exception& e) {
        throw InputError("malformed scenario file: " + std::string(e.what()));
    }
}

void save_scenario(const Scenario& sc, const std::filesystem::path& path) {
    ordered_json j;
    j["name"] = sc.name;
    j["dt"] = sc.dt;
    j["n_steps"] = sc.n_steps;
    j["horizon"] = sc.horizon;
    j["n_exp"] = sc.n_exp;
    j["seed"] = sc.seed;
    j["strategy"] = strategy_name(sc.strategy.kind);
    j["planning_time_ms"] = sc.planning_time_ms;
    j["prioritization_time_ms"] = sc.prioritization_time_ms;
    j["speed_weight"] = sc.speed_weight;
    j["mpa"] = {{"speed_levels", sc.mpa.speed_levels},
                {"steering_levels", sc.mpa.steering_levels},
                {"max_speed_change", sc.mpa.max_speed_change},
                {"max_steering_change", sc.mpa.max_steering_change},
                {"n_samples", sc.mpa.n_samples}};
    j["vehicle"] = {{"wheelbase", sc.mpa.vehicle.wheelbase},
                    {"max_speed", sc.mpa.vehicle.max_speed},
                    {"max_steering", sc.mpa.vehicle.max_steering},
                    {"max_acceleration", sc.mpa.vehicle.max_acceleration},
                    {"body_length", sc.mpa.vehicle.body_length},
                    {"body_width", sc.mpa.vehicle.body_width}};
    j["boundaries"] = json::array();
    for (const ConvexPolygon& b : sc.boundaries) j["boundaries"].push_back(polygon_to_json(b));
    j["vehicles"] = json::array();
    for (const VehicleSpec& v : sc.vehicles) {
        ordered_json vj;
        vj["id"] = v.id;
        vj["start"] = {{"x", v.start.x}, {"y", v.start.y}, {"yaw", v.start.yaw},
                       {"speed", v.start.speed}};
        vj["start_steering"] = v.start_steering;
        vj["path"] = json::array();
        for (const Vec2& p : v.reference_path) vj["path"].push_back({p.x, p.y});
        vj["reference_speed"] = v.reference_speed;
        j["vehicles"].push_back(std::move(vj));
    }
    write_text(path, j.dump(2) + "\n");
}

std::string step_csv(const ExperimentResult& result, const std::string& strategy) {
    std::ostringstream out;
    out << kStepCsvHeader << "\n";
    for (const StepRecord& rec : result.records) {
        out << rec.step << ',' << strategy << ',' << rec.graph.n_vertices() << ','
            << rec.graph.n_edges() << ',' << rec.levels.n_levels << ','
            << format_ms(rec.modeled.total.ms()) << ',' << format_ms(rec.measured.total.ms())
            << ',' << format_ms(rec.step_cost) << ',' << rec.n_infeasible << "\n";
    }
    return out.str();
}

std::string agent_csv(const ExperimentResult& result, const std::string& strategy) {
    std::ostringstream out;
    out << kAgentCsvHeader << "\n";
    for (const StepRecord& rec : result.records)
        for (const AgentStepRecord& a : rec.agents)
            out << rec.step << ',' << strategy << ',' << a.agent << ',' << a.priority << ','
                << a.level << ',' << format_ms(a.cost) << ',' << format_ms(a.solve_ms) << ','
                << (a.infeasible ? 1 : 0) << "\n";
    return out.str();
}

std::string histogram_csv(const std::map<int, std::uint64_t>& histogram) {
    std::ostringstream out;
    out << kHistogramCsvHeader << "\n";
    for (const auto& [levels, count] : histogram) out << levels << ',' << count << "\n";
    return out.str();
}

void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
    ordered_json j;
    j["command"] = m.command;
    j["config_path"] = m.config_path;
    j["seed"] = m.seed;
    j["out_dir"] = m.out_dir;
    j["tool_version"] = m.tool_version;
    j["timestamp"] = m.timestamp;
    write_text(path, j.dump(2) + "\n");
}

} // namespace pp
