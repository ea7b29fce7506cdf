#include "pp/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pp/errors.hpp"
#include "pp/rng.hpp"

namespace pp {

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
    case StrategyKind::Constant: return "constant";
    case StrategyKind::Random: return "random";
    case StrategyKind::ConstraintBased: return "constraint";
    case StrategyKind::Coloring: return "coloring";
    }
    return "unknown";
}

std::optional<StrategyKind> strategy_from_name(const std::string& name) {
    if (name == "constant") return StrategyKind::Constant;
    if (name == "random") return StrategyKind::Random;
    if (name == "constraint") return StrategyKind::ConstraintBased;
    if (name == "coloring") return StrategyKind::Coloring;
    return std::nullopt;
}

Coloring greedy_color(const CouplingGraph& g) {
    const int n = g.n_vertices();
    std::vector<int> color(static_cast<std::size_t>(n) + 1, 0); // 0 = uncolored
    std::vector<VertexId> uncolored(static_cast<std::size_t>(n));
    std::iota(uncolored.begin(), uncolored.end(), 1);

    auto saturation = [&](VertexId i) {
        std::set<int> cs;
        for (VertexId j : g.neighbors(i))
            if (color[static_cast<std::size_t>(j)] != 0) cs.insert(color[static_cast<std::size_t>(j)]);
        return static_cast<int>(cs.size());
    };

    Coloring out;
    while (!uncolored.empty()) {
        int s_max = -1; // first inspected vertex always seeds i_max (FFO)
        VertexId i_max = 0;
        for (VertexId i : uncolored) { // ascending id
            int s = saturation(i);
            if (s > s_max) {
                s_max = s;
                i_max = i;
            }
            if (s == s_max && degree(g, i) > degree(g, i_max)) i_max = i;
        }
        std::set<int> adjacent_colors;
        for (VertexId j : g.neighbors(i_max))
            if (color[static_cast<std::size_t>(j)] != 0)
                adjacent_colors.insert(color[static_cast<std::size_t>(j)]);
        int c = 1;
        while (adjacent_colors.contains(c)) ++c;
        color[static_cast<std::size_t>(i_max)] = c;
        out.n_colors = std::max(out.n_colors, c);
        uncolored.erase(std::find(uncolored.begin(), uncolored.end(), i_max));
    }
    for (VertexId i = 1; i <= n; ++i) out.color[i] = color[static_cast<std::size_t>(i)];
    return out;
}

bool is_valid_coloring(const CouplingGraph& g, const Coloring& c) {
    std::set<int> used;
    for (VertexId i = 1; i <= g.n_vertices(); ++i) {
        auto it = c.color.find(i);
        if (it == c.color.end() || it->second < 1) return false;
        used.insert(it->second);
    }
    if (static_cast<int>(used.size()) != c.n_colors || *used.rbegin() != c.n_colors) return false;
    for (const auto& [a, b] : g.edges())
        if (c.color.at(a) == c.color.at(b)) return false;
    return true;
}

namespace {

bool colorable_with_k(const CouplingGraph& g, int k, std::vector<int>& assign, VertexId i,
                      int max_used) {
    if (i > g.n_vertices()) return true;
    // symmetry break: a fresh color may only be max_used + 1
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (VertexId j : g.neighbors(i)) {
            if (j < i && assign[static_cast<std::size_t>(j)] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        assign[static_cast<std::size_t>(i)] = c;
        if (colorable_with_k(g, k, assign, i + 1, std::max(max_used, c))) return true;
    }
    assign[static_cast<std::size_t>(i)] = 0;
    return false;
}

} // namespace

int chromatic_number_bruteforce(const CouplingGraph& g) {
    if (g.n_vertices() > 12)
        throw BudgetError("chromatic_number_bruteforce supports at most 12 vertices");
    for (int k = 1; k <= g.n_vertices(); ++k) {
        std::vector<int> assign(static_cast<std::size_t>(g.n_vertices()) + 1, 0);
        if (colorable_with_k(g, k, assign, 1, 0)) return k;
    }
    return g.n_vertices();
}

PriorityAssignment color_to_priority(const Coloring& c) {
    std::vector<std::pair<int, VertexId>> order; // (color, id)
    for (const auto& [i, col] : c.color) {
        if (col < 1 || col > c.n_colors)
            throw ContractError("invalid coloring passed to color_to_priority");
        order.emplace_back(col, i);
    }
    std::sort(order.begin(), order.end());
    PriorityAssignment p;
    int rank = 1;
    for (const auto& [col, i] : order) p.priority[i] = rank++;
    return p;
}

CouplingDag orient_edges(const CouplingGraph& g, const PriorityAssignment& p) {
    std::vector<std::pair<VertexId, VertexId>> arcs;
    arcs.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) {
        auto ita = p.priority.find(a);
        auto itb = p.priority.find(b);
        if (ita == p.priority.end() || itb == p.priority.end())
            throw InputError("priority missing for a vertex");
        if (ita->second == itb->second)
            throw ContractError("adjacent vertices share a priority");
        if (ita->second < itb->second)
            arcs.emplace_back(a, b);
        else
            arcs.emplace_back(b, a);
    }
    return CouplingDag(g.n_vertices(), std::move(arcs));
}

Coloring reorder_levels(const Coloring& c, const CouplingGraph& g) {
    struct ClassInfo {
        int max_degree = 0;
        int degree_sum = 0;
        int original = 0;
    };
    std::vector<ClassInfo> classes(static_cast<std::size_t>(c.n_colors));
    for (int col = 1; col <= c.n_colors; ++col)
        classes[static_cast<std::size_t>(col - 1)].original = col;
    for (const auto& [i, col] : c.color) {
        auto& cl = classes[static_cast<std::size_t>(col - 1)];
        int d = degree(g, i);
        cl.max_degree = std::max(cl.max_degree, d);
        cl.degree_sum += d;
    }
    std::sort(classes.begin(), classes.end(), [](const ClassInfo& a, const ClassInfo& b) {
        if (a.max_degree != b.max_degree) return a.max_degree > b.max_degree;
        if (a.degree_sum != b.degree_sum) return a.degree_sum > b.degree_sum;
        return a.original < b.original;
    });
    std::vector<int> new_color(static_cast<std::size_t>(c.n_colors) + 1, 0);
    for (int rank = 0; rank < c.n_colors; ++rank)
        new_color[static_cast<std::size_t>(classes[static_cast<std::size_t>(rank)].original)] =
            rank + 1;
    Coloring out;
    out.n_colors = c.n_colors;
    for (const auto& [i, col] : c.color)
        out.color[i] = new_color[static_cast<std::size_t>(col)];
    return out;
}

PriorityAssignment prioritize(const PrioritizationStrategy& strategy, const CouplingGraph& g,
                              const std::map<VertexId, int>* collision_counts) {
    const int n = g.n_vertices();
    PriorityAssignment p;
    switch (strategy.kind) {
    case StrategyKind::Constant:
        for (VertexId i = 1; i <= n; ++i) p.priority[i] = i;
        return p;
    case StrategyKind::Random: {
        // Fisher-Yates over ascending ids, driven by the explicit seed.
        std::vector<VertexId> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        Rng rng(strategy.seed);
        for (std::size_t i = perm.size() - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.bounded(i + 1)]);
        for (int rank = 0; rank < n; ++rank) p.priority[perm[static_cast<std::size_t>(rank)]] = rank + 1;
        return p;
    }
    case StrategyKind::ConstraintBased: {
        if (collision_counts == nullptr)
            throw InputError("constraint-based prioritization needs collision counts");
        std::vector<std::pair<int, VertexId>> order; // (-count, id)
        for (VertexId i = 1; i <= n; ++i) {
            auto it = collision_counts->find(i);
            if (it == collision_counts->end())
                throw InputError("collision count missing for a vertex");
            order.emplace_back(-it->second, i);
        }
        std::sort(order.begin(), order.end());
        int rank = 1;
        for (const auto& [negcount, i] : order) p.priority[i] = rank++;
        return p;
    }
    case StrategyKind::Coloring:
        return color_to_priority(reorder_levels(greedy_color(g), g));
    }
    throw ContractError("unknown prioritization strategy");
}

std::map<int, std::uint64_t> enumerate_prioritizations(const CouplingGraph& g) {
    const int n = g.n_vertices();
    if (n > 9) throw BudgetError("enumerate_prioritizations supports at most 9 vertices");
    std::vector<int> priority(static_cast<std::size_t>(n) + 1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::map<int, std::uint64_t> histogram;

    std::vector<int> level(static_cast<std::size_t>(n) + 1);
    do {
        for (int i = 0; i < n; ++i) priority[static_cast<std::size_t>(i + 1)] = perm[static_cast<std::size_t>(i)];
        // longest-path levels directly in priority order; every arc goes from
        // higher to lower priority, so that order is topological
        std::vector<VertexId> by_priority(static_cast<std::size_t>(n));
        for (VertexId v = 1; v <= n; ++v)
            by_priority[static_cast<std::size_t>(priority[static_cast<std::size_t>(v)] - 1)] = v;
        std::fill(level.begin(), level.end(), 1);
        int n_levels = 1;
        for (VertexId v : by_priority) {
            for (VertexId u : g.neighbors(v)) {
                if (priority[static_cast<std::size_t>(u)] < priority[static_cast<std::size_t>(v)])
                    level[static_cast<std::size_t>(v)] =
                        std::max(level[static_cast<std::size_t>(v)], level[static_cast<std::size_t>(u)] + 1);
            }
            n_levels = std::max(n_levels, level[static_cast<std::size_t>(v)]);
        }
        ++histogram[n_levels];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return histogram;
}

int min_levels(const CouplingGraph& g) {
    return chromatic_number_bruteforce(g);
}

} // namespace pp
