#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/multigraph.hpp"

namespace coverlab {

/// A kernel multigraph together with one path length per kernel edge.
/// Expanding edge e into a path of lengths[e] edges (inserting
/// lengths[e] - 1 fresh degree-2 vertices) recovers the subdivided graph.
struct SubdividedGraph {
    Multigraph kernel;
    std::vector<std::uint32_t> lengths; // per kernel edge, >= 1

    std::size_t nu2() const {
        std::size_t s = 0;
        for (auto l : lengths) s += l - 1;
        return s;
    }
    std::size_t expanded_vertices() const { return kernel.vertex_count() + nu2(); }
    std::size_t expanded_edges() const { return nu2() + kernel.edge_count(); }
};

struct KernelExtraction {
    SubdividedGraph sub;
    /// Components that are pure cycles of degree-2 vertices. These have no
    /// kernel representation; they are reported, not dropped silently.
    std::vector<std::vector<Multigraph::vertex>> pure_cycle_components;
};

/// Suppress all degree-2 vertices: kernel vertices are exactly those of
/// degree >= 3 (relabelled in increasing original order), and each maximal
/// induced path of length l becomes a kernel edge with length l.
/// Requires minimum degree >= 2.
inline KernelExtraction extract_kernel(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 0 && g.min_degree() < 2) throw invalid_input("extract_kernel: minimum degree < 2");

    KernelExtraction out;
    std::vector<std::int64_t> kernel_id(n, -1);
    std::vector<Multigraph::vertex> kernel_verts;
    for (Multigraph::vertex v = 0; v < n; ++v) {
        if (g.degree(v) >= 3) {
            kernel_id[v] = static_cast<std::int64_t>(kernel_verts.size());
            kernel_verts.push_back(v);
        }
    }
    out.sub.kernel = Multigraph(kernel_verts.size());

    std::vector<char> edge_used(g.edge_count(), 0);
    for (Multigraph::vertex v : kernel_verts) {
        for (auto e0 : g.incident_edges(v)) {
            if (edge_used[e0]) continue;
            // Trace the induced path starting with edge e0.
            edge_used[e0] = 1;
            Multigraph::vertex cur = g.other_endpoint(e0, v);
            std::uint32_t len = 1;
            Multigraph::edge_id last = e0;
            while (kernel_id[cur] < 0) {
                // cur has degree exactly 2: continue through its other edge.
                const auto& inc = g.incident_edges(cur);
                const Multigraph::edge_id nxt = (inc[0] == last) ? inc[1] : inc[0];
                edge_used[nxt] = 1;
                cur = g.other_endpoint(nxt, cur);
                last = nxt;
                ++len;
            }
            out.sub.kernel.add_edge(static_cast<Multigraph::vertex>(kernel_id[v]),
                                    static_cast<Multigraph::vertex>(kernel_id[cur]));
            out.sub.lengths.push_back(len);
        }
    }

    // Anything untouched lives in an all-degree-2 component: a pure cycle.
    std::vector<char> seen(n, 0);
    for (Multigraph::vertex s = 0; s < n; ++s) {
        if (seen[s] || kernel_id[s] >= 0 || edge_used[g.incident_edges(s)[0]]) continue;
        std::vector<Multigraph::vertex> comp;
        Multigraph::vertex cur = s;
        Multigraph::edge_id step = g.incident_edges(s)[0];
        do {
            seen[cur] = 1;
            comp.push_back(cur);
            edge_used[step] = 1;
            cur = g.other_endpoint(step, cur);
            const auto& inc = g.incident_edges(cur);
            step = edge_used[inc[0]] ? inc[1] : inc[0];
        } while (cur != s);
        std::sort(comp.begin(), comp.end());
        out.pure_cycle_components.push_back(std::move(comp));
    }
    return out;
}

/// Expand each kernel edge e into a path of lengths[e] edges. Kernel
/// vertices keep ids 0..N-1; fresh degree-2 vertices are appended in edge
/// order, walking from the lower-indexed endpoint to the higher.
inline Multigraph subdivide(const Multigraph& kernel, const std::vector<std::uint32_t>& lengths) {
    if (lengths.size() != kernel.edge_count())
        throw invalid_input("subdivide: one length per kernel edge required");
    std::size_t extra = 0;
    for (auto l : lengths) {
        if (l < 1) throw invalid_input("subdivide: lengths must be >= 1");
        extra += l - 1;
    }
    Multigraph g(kernel.vertex_count() + extra);
    Multigraph::vertex next = static_cast<Multigraph::vertex>(kernel.vertex_count());
    for (Multigraph::edge_id e = 0; e < kernel.edge_count(); ++e) {
        const auto [u, v] = kernel.edge(e);
        Multigraph::vertex prev = u;
        for (std::uint32_t i = 1; i < lengths[e]; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, v);
    }
    return g;
}

/// Canonical form (sorted (u, v, length) triples) for comparing subdivided
/// graphs up to relabelling of the degree-2 vertices.
inline std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>
canonical_subdivided_form(const SubdividedGraph& sub) {
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> out;
    for (Multigraph::edge_id e = 0; e < sub.kernel.edge_count(); ++e) {
        const auto [u, v] = sub.kernel.edge(e);
        out.emplace_back(u, v, sub.lengths[e]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace coverlab
