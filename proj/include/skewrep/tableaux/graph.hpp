#pragma once

/**
 * @file graph.hpp
 * @brief Graph of admissible transformations Lambda -> Lambda +- delta_{ki}.
 */

#include "skewrep/tableaux/enumerate.hpp"

#include <functional>
#include <map>
#include <queue>
#include <vector>

namespace skewrep {

struct TransformationEdge {
    std::size_t from;   // Lambda
    std::size_t to;     // Lambda + delta_{ki}
    int k;              // gl index 1..m+n-1
    int i;              // 1..k'
};

struct TransformationGraph {
    std::size_t vertices = 0;
    std::vector<TransformationEdge> edges;
    bool connected = true;
    /// Spanning tree as indices into edges; empty when disconnected.
    std::vector<std::size_t> spanning_tree;
};

using TableauIndex = std::map<std::vector<std::vector<int>>, std::size_t>;

inline TableauIndex index_tableaux(const std::vector<GTTableau>& basis) {
    TableauIndex idx;
    for (std::size_t j = 0; j < basis.size(); ++j) idx.emplace(basis[j].rows(), j);
    return idx;
}

/// Lambda + sign * delta_{ki} as a tableau (k is the gl index, row k' = r + k).
inline GTTableau shifted(const SkewShape& s, const GTTableau& t, int k, int i, int sign) {
    GTTableau u = t;
    u(s.r() + k, i) += sign;
    return u;
}

/// BFS connectivity over the given edge list; fills connected and spanning_tree.
inline void compute_connectivity(TransformationGraph& g) {
    g.spanning_tree.clear();
    if (g.vertices == 0) {
        g.connected = true;
        return;
    }
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertices);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        adj[g.edges[e].from].emplace_back(g.edges[e].to, e);
        adj[g.edges[e].to].emplace_back(g.edges[e].from, e);
    }
    std::vector<bool> seen(g.vertices, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto [w, e] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            ++reached;
            g.spanning_tree.push_back(e);
            q.push(w);
        }
    }
    g.connected = reached == g.vertices;
    if (!g.connected) g.spanning_tree.clear();
}

/// keep(edge) may drop edges, e.g. those whose matrix coefficient vanishes.
inline TransformationGraph transformation_graph(const SkewShape& s, const std::vector<GTTableau>& basis,
                                                const std::function<bool(const TransformationEdge&)>& keep = {}) {
    TransformationGraph g;
    g.vertices = basis.size();
    auto idx = index_tableaux(basis);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (int k = 1; k <= s.m() + s.n() - 1; ++k)
            for (int i = 1; i <= s.r() + k; ++i) {
                auto it = idx.find(shifted(s, basis[a], k, i, +1).rows());
                if (it == idx.end()) continue;
                TransformationEdge e{a, it->second, k, i};
                if (!keep || keep(e)) g.edges.push_back(e);
            }
    compute_connectivity(g);
    return g;
}

inline TransformationGraph transformation_graph(const SkewShape& s) {
    return transformation_graph(s, enumerate_tableaux(s));
}

} // namespace skewrep
