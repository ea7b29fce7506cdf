#include "pp/graph.hpp"

#include <algorithm>
#include <deque>

#include "pp/errors.hpp"

namespace pp {

CouplingGraph::CouplingGraph(int n_vertices, std::vector<std::pair<VertexId, VertexId>> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 1) throw InputError("graph needs at least one vertex");
    for (auto& [a, b] : edges_) {
        if (a < 1 || a > n_ || b < 1 || b > n_)
            throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("self-loops are not allowed");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");
    adjacency_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const auto& [a, b] : edges_) {
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

const std::vector<VertexId>& CouplingGraph::neighbors(VertexId i) const {
    if (!has_vertex(i)) throw InputError("unknown vertex id");
    return adjacency_[static_cast<std::size_t>(i)];
}

int CouplingGraph::max_degree() const {
    int d = 0;
    for (VertexId i = 1; i <= n_; ++i)
        d = std::max(d, static_cast<int>(neighbors(i).size()));
    return d;
}

CouplingDag::CouplingDag(int n_vertices, std::vector<std::pair<VertexId, VertexId>> arcs)
    : n_(n_vertices), arcs_(std::move(arcs)) {
    if (n_ < 1) throw InputError("graph needs at least one vertex");
    for (const auto& [a, b] : arcs_) {
        if (a < 1 || a > n_ || b < 1 || b > n_)
            throw InputError("arc endpoint out of range");
        if (a == b) throw InputError("self-loops are not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw InputError("duplicate arc");
    successors_.assign(static_cast<std::size_t>(n_) + 1, {});
    predecessors_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const auto& [a, b] : arcs_) {
        successors_[static_cast<std::size_t>(a)].push_back(b);
        predecessors_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& v : successors_) std::sort(v.begin(), v.end());
    for (auto& v : predecessors_) std::sort(v.begin(), v.end());
}

const std::vector<VertexId>& CouplingDag::successors(VertexId i) const {
    if (!has_vertex(i)) throw InputError("unknown vertex id");
    return successors_[static_cast<std::size_t>(i)];
}

const std::vector<VertexId>& CouplingDag::predecessors(VertexId i) const {
    if (!has_vertex(i)) throw InputError("unknown vertex id");
    return predecessors_[static_cast<std::size_t>(i)];
}

int degree(const CouplingGraph& g, VertexId i) {
    return static_cast<int>(g.neighbors(i).size());
}

std::vector<VertexId> topological_order(const CouplingDag& d) {
    const int n = d.n_vertices();
    std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 0);
    std::deque<VertexId> ready;
    for (VertexId i = 1; i <= n; ++i) {
        remaining[static_cast<std::size_t>(i)] = d.in_degree(i);
        if (remaining[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
    }
    std::vector<VertexId> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        VertexId v = ready.front();
        ready.pop_front();
        order.push_back(v);
        for (VertexId s : d.successors(v))
            if (--remaining[static_cast<std::size_t>(s)] == 0) ready.push_back(s);
    }
    if (static_cast<int>(order.size()) != n)
        throw ContractError("directed coupling graph contains a cycle");
    return order;
}

bool is_acyclic(const CouplingDag& d) {
    try {
        topological_order(d);
        return true;
    } catch (const ContractError&) {
        return false;
    }
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> sources_sinks(const CouplingDag& d) {
    if (!is_acyclic(d)) throw ContractError("sources_sinks requires an acyclic graph");
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
    for (VertexId i = 1; i <= d.n_vertices(); ++i) {
        if (d.in_degree(i) == 0) sources.push_back(i);
        if (d.out_degree(i) == 0) sinks.push_back(i);
    }
    return {sources, sinks};
}

LevelAssignment compute_levels(const CouplingDag& d) {
    LevelAssignment out;
    for (VertexId v : topological_order(d)) {
        int lvl = 1;
        for (VertexId p : d.predecessors(v)) lvl = std::max(lvl, out.level.at(p) + 1);
        out.level[v] = lvl;
        out.n_levels = std::max(out.n_levels, lvl);
    }
    return out;
}

WeightedPath longest_weighted_path(const CouplingDag& d,
                                   const std::map<VertexId, Duration>& weight) {
    const int n = d.n_vertices();
    for (VertexId i = 1; i <= n; ++i)
        if (!weight.contains(i)) throw InputError("missing vertex weight");

    std::vector<VertexId> order = topological_order(d);

    // best[v]: max path weight from v to any sink; next[v]: successor on the
    // lexicographically smallest such path (smallest id wins ties).
    std::vector<Duration> best(static_cast<std::size_t>(n) + 1);
    std::vector<VertexId> next(static_cast<std::size_t>(n) + 1, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        Duration b = weight.at(v);
        VertexId nx = 0;
        for (VertexId s : d.successors(v)) { // ascending id
            Duration cand = weight.at(v) + best[static_cast<std::size_t>(s)];
            if (nx == 0 || cand > b) {
                b = cand;
                nx = s;
            }
        }
        best[static_cast<std::size_t>(v)] = b;
        next[static_cast<std::size_t>(v)] = nx;
    }

    VertexId start = 0;
    for (VertexId i = 1; i <= n; ++i) {
        if (d.in_degree(i) != 0) continue;
        if (start == 0 || best[static_cast<std::size_t>(i)] > best[static_cast<std::size_t>(start)])
            start = i;
    }

    WeightedPath out;
    out.total = best[static_cast<std::size_t>(start)];
    for (VertexId v = start; v != 0; v = next[static_cast<std::size_t>(v)])
        out.path.push_back(v);
    return out;
}

} // namespace pp
