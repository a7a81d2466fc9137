#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <vector>

#include "coverlab/multigraph.hpp"

namespace coverlab {

struct TreeLikeCounts {
    std::size_t tree_like = 0;               // induced ball is a tree
    std::size_t one_cycle = 0;               // exactly one independent cycle
    std::size_t multi_cycle_neighborhoods = 0; // two or more
    std::vector<std::uint8_t> cycles_seen;   // per vertex: 0, 1, or 2 (meaning >= 2)
};

/// Default diagnostic depth: ceil(0.25 ln N), caller-overridable.
inline std::size_t default_tree_like_depth(std::size_t n) {
    if (n < 2) return 1;
    const double l = std::ceil(0.25 * std::log(static_cast<double>(n)));
    return l < 1.0 ? 1 : static_cast<std::size_t>(l);
}

/// Classify each vertex by the number of independent cycles in the subgraph
/// induced by its depth-L0 ball (cyclomatic number E - V + 1; the ball is
/// connected by construction). Loops and parallel edges count as cycles.
inline TreeLikeCounts count_locally_tree_like(const Multigraph& g, std::size_t L0) {
    const std::size_t n = g.vertex_count();
    TreeLikeCounts out;
    out.cycles_seen.assign(n, 0);
    std::vector<std::int64_t> depth(n, -1);
    std::vector<Multigraph::vertex> ball;
    for (Multigraph::vertex v = 0; v < n; ++v) {
        ball.clear();
        std::queue<Multigraph::vertex> q;
        q.push(v);
        depth[v] = 0;
        ball.push_back(v);
        while (!q.empty()) {
            const auto x = q.front();
            q.pop();
            if (static_cast<std::size_t>(depth[x]) == L0) continue;
            for (auto e : g.incident_edges(x)) {
                const auto w = g.other_endpoint(e, x);
                if (depth[w] < 0) {
                    depth[w] = depth[x] + 1;
                    ball.push_back(w);
                    q.push(w);
                }
            }
        }
        // induced edge count; every incidence inside the ball sees the edge
        // twice (loops included, since they are listed twice)
        std::size_t twice_edges = 0;
        for (auto x : ball)
            for (auto e : g.incident_edges(x))
                if (depth[g.other_endpoint(e, x)] >= 0) ++twice_edges;
        const std::size_t edges = twice_edges / 2;
        const std::size_t cyc = edges + 1 - ball.size();
        if (cyc == 0)
            ++out.tree_like;
        else if (cyc == 1)
            ++out.one_cycle;
        else
            ++out.multi_cycle_neighborhoods;
        out.cycles_seen[v] = cyc >= 2 ? 2 : static_cast<std::uint8_t>(cyc);
        for (auto x : ball) depth[x] = -1;
    }
    return out;
}

} // namespace coverlab
