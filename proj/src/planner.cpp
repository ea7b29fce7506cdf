#include "pp/planner.hpp"

#include <algorithm>
#include <limits>

#include "pp/errors.hpp"
#include "pp/rng.hpp"

namespace pp {

double stage_cost(const VehicleState& pose, const ReferencePoint& ref, double speed_weight) {
    const double dx = pose.x - ref.position.x;
    const double dy = pose.y - ref.position.y;
    const double dv = pose.speed - ref.speed;
    return dx * dx + dy * dy + speed_weight * dv * dv;
}

double trajectory_cost(const std::vector<VehicleState>& poses, const ReferenceTrajectory& ref,
                       double speed_weight) {
    if (poses.size() != ref.size()) throw InputError("pose and reference lengths differ");
    double total = 0.0;
    for (std::size_t l = 0; l < poses.size(); ++l)
        total += stage_cost(poses[l], ref[l], speed_weight);
    return total;
}

namespace {

struct Node {
    int mpa_state = 0;
    VehicleState pose;
    int depth = 0;
    int parent = -1;
    int primitive = -1;        // primitive that produced this node
    double cost_to_here = 0.0; // stage costs of steps 1..depth
    std::vector<int> untried;  // primitive indices not yet expanded
};

bool collides(const ConvexPolygon& occupancy, const std::vector<ConvexPolygon>& obstacles) {
    for (const ConvexPolygon& o : obstacles)
        if (polygons_intersect(occupancy, o)) return true;
    return false;
}

// Terminal-set membership: standstill, or the final primitive can repeat.
bool terminal_ok(const MotionPrimitiveAutomaton& mpa, int state) {
    if (mpa.speed_of(state) == 0.0) return true;
    for (int idx : mpa.transitions_from(state))
        if (mpa.primitives()[static_cast<std::size_t>(idx)].to_state == state) return true;
    return false;
}

Prediction assemble(const std::vector<Node>& nodes, int leaf,
                    const MotionPrimitiveAutomaton& mpa) {
    std::vector<int> chain;
    for (int v = leaf; nodes[static_cast<std::size_t>(v)].parent >= 0;
         v = nodes[static_cast<std::size_t>(v)].parent)
        chain.push_back(v);
    std::reverse(chain.begin(), chain.end());

    Prediction out;
    VehicleState pose = nodes[0].pose;
    for (int v : chain) {
        const Node& node = nodes[static_cast<std::size_t>(v)];
        const MotionPrimitive& prim = mpa.primitives()[static_cast<std::size_t>(node.primitive)];
        out.occupancies.push_back(mpa.swept_occupancy(pose, prim));
        pose = node.pose;
        out.poses.push_back(pose);
        out.primitive_sequence.push_back(node.primitive);
        out.final_state = node.mpa_state;
    }
    out.cost = nodes[static_cast<std::size_t>(leaf)].cost_to_here;
    return out;
}

} // namespace

Prediction plan(const VehicleState& state, int start_state, const ReferenceTrajectory& ref,
                const std::vector<std::vector<ConvexPolygon>>& obstacles,
                const MotionPrimitiveAutomaton& mpa, const PlannerConfig& cfg) {
    if (static_cast<int>(ref.size()) != cfg.horizon)
        throw InputError("reference trajectory length must equal the horizon");
    if (static_cast<int>(obstacles.size()) != cfg.horizon)
        throw InputError("obstacle list length must equal the horizon");
    if (cfg.horizon < 1 || cfg.n_exp < 1) throw InputError("invalid planner configuration");

    const double w = cfg.speed_weight;

    std::vector<Node> nodes;
    nodes.push_back({start_state, state, 0, -1, -1, 0.0, mpa.transitions_from(start_state)});

    double best_cost = std::numeric_limits<double>::infinity();
    int best_leaf = -1;
    int deepest = 0;

    // Incumbent rollouts keep a feasible anytime candidate in the tree
    // whenever one exists: (1) repeat the hold primitive of the current
    // automaton state, (2) greedily follow the reference one step at a time.
    // Both are independent of the expansion budget, so larger budgets extend
    // the same search and the returned cost is non-increasing.
    auto rollout = [&](auto&& choose) {
        int node = 0;
        for (int d = 0; d < cfg.horizon; ++d) {
            const VehicleState& pose = nodes[static_cast<std::size_t>(node)].pose;
            const int prim_idx =
                choose(nodes[static_cast<std::size_t>(node)].mpa_state, pose, d);
            if (prim_idx < 0) break;
            const MotionPrimitive& prim = mpa.primitives()[static_cast<std::size_t>(prim_idx)];
            if (collides(mpa.swept_occupancy(pose, prim), obstacles[static_cast<std::size_t>(d)]))
                break;
            Node child;
            child.mpa_state = prim.to_state;
            child.pose = mpa.apply(pose, prim);
            child.depth = d + 1;
            child.parent = node;
            child.primitive = prim_idx;
            child.cost_to_here = nodes[static_cast<std::size_t>(node)].cost_to_here +
                                 stage_cost(child.pose, ref[static_cast<std::size_t>(d)], w);
            if (child.depth < cfg.horizon) child.untried = mpa.transitions_from(child.mpa_state);
            // the chosen primitive is consumed for this node (it may already be
            // gone when two rollouts share a prefix)
            auto& untried = nodes[static_cast<std::size_t>(node)].untried;
            if (auto it = std::find(untried.begin(), untried.end(), prim_idx);
                it != untried.end())
                untried.erase(it);
            nodes.push_back(std::move(child));
            node = static_cast<int>(nodes.size()) - 1;
            deepest = std::max(deepest, nodes.back().depth);
            if (nodes.back().depth == cfg.horizon && terminal_ok(mpa, nodes.back().mpa_state) &&
                nodes.back().cost_to_here < best_cost) {
                best_cost = nodes.back().cost_to_here;
                best_leaf = node;
            }
        }
    };

    rollout([&](int state, const VehicleState&, int) { return mpa.hold_primitive(state); });
    rollout([&](int state, const VehicleState& pose, int d) {
        int best_prim = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int idx : mpa.transitions_from(state)) {
            const MotionPrimitive& prim = mpa.primitives()[static_cast<std::size_t>(idx)];
            if (collides(mpa.swept_occupancy(pose, prim), obstacles[static_cast<std::size_t>(d)]))
                continue;
            const double c =
                stage_cost(mpa.apply(pose, prim), ref[static_cast<std::size_t>(d)], w);
            if (c < best) {
                best = c;
                best_prim = idx;
            }
        }
        return best_prim;
    });

    std::vector<int> frontier; // nodes with depth < horizon and untried primitives
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].depth < cfg.horizon && !nodes[i].untried.empty())
            frontier.push_back(static_cast<int>(i));

    Rng rng(cfg.seed);
    for (int e = 0; e < cfg.n_exp && !frontier.empty(); ++e) {
        const std::size_t slot = static_cast<std::size_t>(rng.bounded(frontier.size()));
        const int node = frontier[slot];
        auto& untried = nodes[static_cast<std::size_t>(node)].untried;
        const std::size_t pick = static_cast<std::size_t>(rng.bounded(untried.size()));
        const int prim_idx = untried[pick];
        untried[pick] = untried.back();
        untried.pop_back();
        if (untried.empty()) {
            frontier[slot] = frontier.back();
            frontier.pop_back();
        }

        const MotionPrimitive& prim = mpa.primitives()[static_cast<std::size_t>(prim_idx)];
        const int d = nodes[static_cast<std::size_t>(node)].depth;
        const VehicleState pose = nodes[static_cast<std::size_t>(node)].pose;
        if (collides(mpa.swept_occupancy(pose, prim), obstacles[static_cast<std::size_t>(d)]))
            continue;

        Node child;
        child.mpa_state = prim.to_state;
        child.pose = mpa.apply(pose, prim);
        child.depth = d + 1;
        child.parent = node;
        child.primitive = prim_idx;
        child.cost_to_here = nodes[static_cast<std::size_t>(node)].cost_to_here +
                             stage_cost(child.pose, ref[static_cast<std::size_t>(d)], w);
        deepest = std::max(deepest, child.depth);
        if (child.depth == cfg.horizon) {
            if (terminal_ok(mpa, child.mpa_state) && child.cost_to_here < best_cost) {
                best_cost = child.cost_to_here;
                nodes.push_back(std::move(child));
                best_leaf = static_cast<int>(nodes.size()) - 1;
            }
            continue;
        }
        child.untried = mpa.transitions_from(child.mpa_state);
        nodes.push_back(std::move(child));
        frontier.push_back(static_cast<int>(nodes.size()) - 1);
    }

    if (best_leaf < 0) {
        // deepest feasible prefix for diagnosis
        int node = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].depth == deepest) {
                node = static_cast<int>(i);
                break;
            }
        throw PlannerInfeasible("no feasible plan over the full horizon within budget",
                                assemble(nodes, node, mpa));
    }
    return assemble(nodes, best_leaf, mpa);
}

} // namespace pp
