#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/kernel.hpp"
#include "coverlab/path_lengths.hpp"
#include "coverlab/rng.hpp"
#include "coverlab/walk.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

/// The weighted contraction G_0 of a subdivided graph. Each kernel edge's
/// path splits into sub-paths: a heavy edge (l_e >= l*) with
/// l_e = p l* + q, 0 <= q < l*, becomes p-1 sub-paths of length l* and one
/// of length l* + q; a light edge (l_e < l*) stays whole. Every sub-path Q
/// becomes one G_0 edge of conductance kappa = l* / l_Q, so a heavy edge's
/// chain has total resistance l_e / l*.
struct SurrogateGraph {
    struct EdgeInfo {
        std::uint32_t kernel_edge = 0;
        std::uint32_t ell_q = 0; // sub-path length in the expansion
    };

    WeightedGraph g0;
    std::vector<EdgeInfo> edge_info;            // per G_0 edge
    std::uint32_t ell_star = 1;
    std::vector<std::uint32_t> g0_to_expanded;  // G_0 vertex -> expansion vertex
    std::size_t kernel_vertices = 0;            // ids < this are kernel vertices

    double kappa_total() const { return g0.total_edge_weight(); }
};

/// Convenience default for l*: max(1, floor(1 / (xi * omega))).
inline std::uint32_t default_ell_star(double xi, double omega) {
    if (xi <= 0.0 || omega <= 0.0) throw invalid_input("default_ell_star: xi, omega > 0 required");
    const double v = std::floor(1.0 / (xi * omega));
    return v < 1.0 ? 1u : static_cast<std::uint32_t>(v);
}

/// Build G_0. Expansion vertex ids follow subdivide(): kernel vertices keep
/// 0..N-1 and interior vertices of edge e are appended walking from the
/// lower endpoint, so the remainder sub-path (length l* + q) sits at the
/// higher-indexed endpoint's end.
inline SurrogateGraph build_G0(const SubdividedGraph& sub, std::uint32_t ell_star) {
    if (ell_star < 1) throw invalid_input("build_G0: l* >= 1 required");
    SurrogateGraph s;
    s.ell_star = ell_star;
    s.kernel_vertices = sub.kernel.vertex_count();

    const std::size_t N = sub.kernel.vertex_count();
    std::vector<WeightedEdge> edges;
    s.g0_to_expanded.resize(N);
    for (std::uint32_t v = 0; v < N; ++v) s.g0_to_expanded[v] = v;

    std::uint32_t next_expanded = static_cast<std::uint32_t>(N); // interior ids in subdivide() order
    std::uint32_t next_g0 = static_cast<std::uint32_t>(N);
    for (Multigraph::edge_id e = 0; e < sub.kernel.edge_count(); ++e) {
        const auto [u, v] = sub.kernel.edge(e);
        const std::uint32_t len = sub.lengths[e];
        const std::uint32_t interior_base = next_expanded;
        next_expanded += len - 1;
        auto expanded_at = [&](std::uint32_t dist) { // vertex at distance `dist` from u along P_e
            if (dist == 0) return u;
            if (dist == len) return v;
            return interior_base + dist - 1;
        };
        if (len < ell_star) { // light: single edge, weight l*/l_e
            edges.push_back({u, v, static_cast<double>(ell_star) / static_cast<double>(len)});
            s.edge_info.push_back({e, len});
            continue;
        }
        const std::uint32_t p = len / ell_star;
        const std::uint32_t q = len % ell_star;
        std::uint32_t g0_prev = u;
        std::uint32_t dist = 0;
        for (std::uint32_t i = 0; i + 1 < p; ++i) { // p-1 sub-paths of length l*
            dist += ell_star;
            const std::uint32_t mid = next_g0++;
            s.g0_to_expanded.push_back(expanded_at(dist));
            edges.push_back({g0_prev, mid, 1.0});
            s.edge_info.push_back({e, ell_star});
            g0_prev = mid;
        }
        // final sub-path of length l* + q reaching v
        edges.push_back({g0_prev, v,
                         static_cast<double>(ell_star) / static_cast<double>(ell_star + q)});
        s.edge_info.push_back({e, ell_star + q});
    }
    s.g0 = WeightedGraph(s.g0_to_expanded.size(), std::move(edges));
    return s;
}

/// Split edge f* = (v1, v2) of G_0 through a fresh midpoint; both halves get
/// weight min{kappa(f*), 1}. For a heavy sub-path, visiting the midpoint is
/// equivalent to crossing f*.
struct SplitEdgeResult {
    WeightedGraph graph;
    std::uint32_t midpoint = 0;
};

inline SplitEdgeResult split_edge(const WeightedGraph& g0, std::uint32_t f_star) {
    if (f_star >= g0.edge_count()) throw invalid_input("split_edge: edge id out of range");
    std::vector<WeightedEdge> edges;
    edges.reserve(g0.edge_count() + 1);
    const std::uint32_t xi = static_cast<std::uint32_t>(g0.vertex_count());
    for (std::uint32_t id = 0; id < g0.edge_count(); ++id) {
        const auto& e = g0.edges()[id];
        if (id == f_star) {
            const double a = std::min(e.kappa, 1.0);
            edges.push_back({e.u, xi, a});
            edges.push_back({xi, e.v, a});
        } else {
            edges.push_back(e);
        }
    }
    return {WeightedGraph(g0.vertex_count() + 1, std::move(edges)), xi};
}

struct VSigmaResult {
    std::vector<std::uint32_t> v_sigma; // sorted
    std::vector<std::uint32_t> v_light; // complement, sorted
    std::size_t seed_vertices = 0;      // endpoints of light edges before closure
};

/// Closure of the light-edge endpoints under the two-neighbour rule: keep
/// adding any vertex with at least two incident edges into the current set.
/// The result does not depend on the scan order. An edge is light when
/// b_m <= l_e <= l*.
inline VSigmaResult build_V_sigma(const Multigraph& kernel,
                                  const std::vector<std::uint32_t>& lengths,
                                  std::uint32_t ell_star) {
    if (lengths.size() != kernel.edge_count())
        throw invalid_input("build_V_sigma: one length per kernel edge required");
    const std::size_t n = kernel.vertex_count();
    const std::size_t M = kernel.edge_count();
    std::size_t total = 0;
    for (auto l : lengths) total += l;
    std::uint64_t b_m = 1;
    if (M >= 2) b_m = path_length_tail_bounds(M, total - M).b_m;

    std::vector<char> in(n, 0);
    std::queue<std::uint32_t> work;
    VSigmaResult res;
    for (Multigraph::edge_id e = 0; e < M; ++e) {
        if (lengths[e] < b_m || lengths[e] > ell_star) continue;
        const auto [u, v] = kernel.edge(e);
        for (auto x : {u, v})
            if (!in[x]) {
                in[x] = 1;
                ++res.seed_vertices;
                work.push(x);
            }
    }
    // Each member, when dequeued, credits its edges to outside vertices;
    // an outside vertex joins on its second credited edge. Every in-out
    // edge is credited exactly once, so the closure is scan-order free.
    std::vector<std::uint32_t> edges_into(n, 0);
    while (!work.empty()) {
        const auto v = work.front();
        work.pop();
        for (auto e : kernel.incident_edges(v)) {
            const auto w = kernel.other_endpoint(e, v);
            if (w == v || in[w]) continue;
            if (++edges_into[w] >= 2) {
                in[w] = 1;
                work.push(w);
            }
        }
    }
    for (std::uint32_t v = 0; v < n; ++v)
        (in[v] ? res.v_sigma : res.v_light).push_back(v);
    return res;
}

struct ScalingCheck {
    double ratio = 0.0;                // r = cover(G) / ((l*)^2 (edge-cover(G_0) + 1))
    double mean_vertex_cover_expanded = 0.0;
    double mean_edge_cover_g0 = 0.0;
    std::uint32_t ell_star = 1;
    std::size_t trials = 0;
    bool within(double tolerance) const { return ratio <= 1.0 + tolerance; }
};

/// Empirical check of the (l*)^2 time rescaling: the vertex cover time of
/// the expansion is bounded by (l*)^2 (edge cover time of G_0 + 1), both
/// walks started at kernel vertex 0.
inline ScalingCheck scaling_check(const SubdividedGraph& sub, std::uint32_t ell_star,
                                  std::size_t trials, std::uint64_t seed, unsigned threads = 1,
                                  const WalkConfig& cfg = WalkConfig{}) {
    const SurrogateGraph s = build_G0(sub, ell_star);
    if (!s.g0.connected()) throw invalid_input("scaling_check: G_0 is disconnected");
    const WeightedGraph expanded = WeightedGraph::expansion(sub);
    ScalingCheck out;
    out.ell_star = ell_star;
    out.trials = trials;
    out.mean_vertex_cover_expanded =
        cover_time_stats(expanded, 0, CoverMode::vertex, trials, cfg, seed, threads).mean;
    out.mean_edge_cover_g0 =
        cover_time_stats(s.g0, 0, CoverMode::edge, trials, cfg, seed, threads, false,
                         /*stream_base=*/1u << 30).mean;
    const double scale = static_cast<double>(ell_star) * static_cast<double>(ell_star);
    out.ratio = out.mean_vertex_cover_expanded / (scale * (out.mean_edge_cover_g0 + 1.0));
    return out;
}

} // namespace coverlab
