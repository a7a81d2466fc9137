#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "coverlab/errors.hpp"

namespace coverlab {

/// Undirected multigraph: loops and parallel edges allowed.
///
/// A loop contributes 2 to the degree of its vertex and appears twice in the
/// incidence list, matching the two configuration points it pairs up.
class Multigraph {
public:
    using vertex = std::uint32_t;
    using edge_id = std::uint32_t;

    Multigraph() = default;
    explicit Multigraph(std::size_t n) : incident_(n) {}

    std::size_t vertex_count() const { return incident_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    edge_id add_edge(vertex u, vertex v) {
        if (u >= incident_.size() || v >= incident_.size())
            throw invalid_input("add_edge: vertex out of range");
        if (u > v) std::swap(u, v);
        const edge_id id = static_cast<edge_id>(edges_.size());
        edges_.emplace_back(u, v);
        incident_[u].push_back(id);
        incident_[v].push_back(id); // loop listed twice on purpose
        return id;
    }

    std::pair<vertex, vertex> edge(edge_id e) const { return edges_[e]; }

    bool is_loop(edge_id e) const { return edges_[e].first == edges_[e].second; }

    vertex other_endpoint(edge_id e, vertex v) const {
        const auto& [a, b] = edges_[e];
        return a == v ? b : a;
    }

    /// Degree counting a loop twice.
    std::size_t degree(vertex v) const { return incident_[v].size(); }

    const std::vector<edge_id>& incident_edges(vertex v) const { return incident_[v]; }

    const std::vector<std::pair<vertex, vertex>>& edges() const { return edges_; }

    std::size_t min_degree() const {
        std::size_t d = incident_.empty() ? 0 : degree(0);
        for (vertex v = 1; v < incident_.size(); ++v) d = std::min(d, degree(v));
        return d;
    }

    bool is_simple() const {
        std::vector<std::pair<vertex, vertex>> sorted(edges_);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i].first == sorted[i].second) return false;
            if (i > 0 && sorted[i] == sorted[i - 1]) return false;
        }
        return true;
    }

    std::vector<std::size_t> degree_multiset() const {
        std::vector<std::size_t> d(vertex_count());
        for (vertex v = 0; v < vertex_count(); ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    /// Connected components as sorted vertex lists, largest first
    /// (ties broken by smallest contained vertex).
    std::vector<std::vector<vertex>> components() const {
        std::vector<std::vector<vertex>> comps;
        std::vector<char> seen(vertex_count(), 0);
        for (vertex s = 0; s < vertex_count(); ++s) {
            if (seen[s]) continue;
            std::vector<vertex> comp;
            std::queue<vertex> q;
            q.push(s);
            seen[s] = 1;
            while (!q.empty()) {
                const vertex v = q.front();
                q.pop();
                comp.push_back(v);
                for (edge_id e : incident_[v]) {
                    const vertex w = other_endpoint(e, v);
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push(w);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        std::stable_sort(comps.begin(), comps.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });
        return comps;
    }

    bool connected() const {
        if (vertex_count() == 0) return false;
        return components().front().size() == vertex_count();
    }

    /// Subgraph induced by `verts` (which must be sorted and unique);
    /// vertices are relabelled 0..k-1 in the given order.
    Multigraph induced(const std::vector<vertex>& verts) const {
        std::vector<std::int64_t> remap(vertex_count(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i) remap[verts[i]] = static_cast<std::int64_t>(i);
        Multigraph g(verts.size());
        for (const auto& [u, v] : edges_) {
            if (remap[u] >= 0 && remap[v] >= 0)
                g.add_edge(static_cast<vertex>(remap[u]), static_cast<vertex>(remap[v]));
        }
        return g;
    }

private:
    std::vector<std::pair<vertex, vertex>> edges_;
    std::vector<std::vector<edge_id>> incident_;
};

/// Largest connected component, relabelled; empty graph stays empty.
inline Multigraph giant_component(const Multigraph& g) {
    if (g.vertex_count() == 0) return g;
    return g.induced(g.components().front());
}

/// Maximal subgraph of minimum degree 2: iterated deletion of vertices of
/// degree <= 1 to a fixed point. May be empty (e.g. for trees).
inline Multigraph two_core(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<char> removed(n, 0);
    std::queue<Multigraph::vertex> q;
    for (Multigraph::vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) {
            q.push(v);
            removed[v] = 1;
        }
    }
    std::vector<char> edge_dead(g.edge_count(), 0);
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (auto e : g.incident_edges(v)) {
            if (edge_dead[e]) continue;
            edge_dead[e] = 1;
            const auto w = g.other_endpoint(e, v);
            if (removed[w]) continue;
            if (--deg[w] <= 1) {
                removed[w] = 1;
                q.push(w);
            }
        }
    }
    std::vector<Multigraph::vertex> keep;
    for (Multigraph::vertex v = 0; v < n; ++v)
        if (!removed[v]) keep.push_back(v);
    return g.induced(keep);
}

} // namespace coverlab
