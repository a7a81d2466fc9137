#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/kernel.hpp"
#include "coverlab/multigraph.hpp"
#include "coverlab/rng.hpp"

namespace coverlab {

struct WeightedEdge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double kappa = 1.0;
};

/// Undirected edge-weighted multigraph for random walks. The walk at v picks
/// an incident half-edge with probability proportional to its conductance
/// kappa; a loop is stored as two half-edges, so it carries 2 kappa of the
/// vertex weight and crossing it is a single step that stays at v.
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(std::size_t n, std::vector<WeightedEdge> edges) : edges_(std::move(edges)), n_(n) {
        build(n);
    }

    static WeightedGraph from_multigraph(const Multigraph& g, double kappa = 1.0) {
        std::vector<WeightedEdge> es;
        es.reserve(g.edge_count());
        for (const auto& [u, v] : g.edges()) es.push_back({u, v, kappa});
        return WeightedGraph(g.vertex_count(), std::move(es));
    }

    /// Unit-weight expansion of a subdivided graph; kernel vertices keep
    /// their ids 0..N-1.
    static WeightedGraph expansion(const SubdividedGraph& sub) {
        return from_multigraph(subdivide(sub.kernel, sub.lengths));
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    std::size_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }
    double vertex_weight(std::uint32_t v) const { return vertex_weight_[v]; } // loops twice
    double total_edge_weight() const { return total_edge_weight_; }           // kappa(E)
    double total_vertex_weight() const { return 2.0 * total_edge_weight_; }

    double stationary(std::uint32_t v) const { return vertex_weight_[v] / total_vertex_weight(); }

    bool unit_weights() const { return unit_; }

    std::uint32_t halfedge_target(std::size_t h) const { return targets_[h]; }
    std::uint32_t halfedge_edge(std::size_t h) const { return edge_ids_[h]; }
    std::size_t halfedge_begin(std::uint32_t v) const { return offsets_[v]; }
    std::size_t halfedge_end(std::uint32_t v) const { return offsets_[v + 1]; }
    double halfedge_weight(std::size_t h) const { return weights_[h]; }

    /// Pick an incident half-edge of v with probability kappa/kappa(v).
    std::size_t sample_halfedge(std::uint32_t v, Rng& rng) const {
        const std::size_t b = offsets_[v];
        const std::size_t e = offsets_[v + 1];
        if (unit_) return b + static_cast<std::size_t>(rng.below(e - b));
        const double r = rng.next_double() * vertex_weight_[v];
        // cum_ holds inclusive prefix sums within the vertex's slice
        std::size_t lo = b, hi = e - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cum_[mid] > r)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

    bool connected() const {
        if (n_ == 0) return false;
        std::vector<char> seen(n_, 0);
        std::queue<std::uint32_t> q;
        q.push(0);
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!q.empty()) {
            const auto v = q.front();
            q.pop();
            for (std::size_t h = offsets_[v]; h < offsets_[v + 1]; ++h) {
                const auto w = targets_[h];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push(w);
                }
            }
        }
        return cnt == n_;
    }

    /// Sample a vertex from the stationary distribution.
    std::uint32_t sample_stationary(Rng& rng) const {
        const double r = rng.next_double() * total_vertex_weight();
        std::size_t lo = 0, hi = n_ - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (vertex_cum_[mid] > r)
                hi = mid;
            else
                lo = mid + 1;
        }
        return static_cast<std::uint32_t>(lo);
    }

private:
    void build(std::size_t n) {
        unit_ = true;
        for (const auto& e : edges_) {
            if (e.u >= n || e.v >= n) throw invalid_input("weighted edge endpoint out of range");
            if (!(e.kappa > 0.0)) throw invalid_input("edge conductance must be positive");
            if (e.kappa != 1.0) unit_ = false;
        }
        offsets_.assign(n + 1, 0);
        for (const auto& e : edges_) {
            ++offsets_[e.u + 1];
            ++offsets_[e.v + 1]; // loops: two half-edges at the same vertex
        }
        for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
        targets_.resize(offsets_[n]);
        edge_ids_.resize(offsets_[n]);
        weights_.resize(offsets_[n]);
        std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (std::uint32_t id = 0; id < edges_.size(); ++id) {
            const auto& e = edges_[id];
            targets_[cursor[e.u]] = e.v;
            edge_ids_[cursor[e.u]] = id;
            weights_[cursor[e.u]++] = e.kappa;
            targets_[cursor[e.v]] = e.u;
            edge_ids_[cursor[e.v]] = id;
            weights_[cursor[e.v]++] = e.kappa;
        }
        vertex_weight_.assign(n, 0.0);
        cum_.resize(offsets_[n]);
        total_edge_weight_ = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            double acc = 0.0;
            for (std::size_t h = offsets_[v]; h < offsets_[v + 1]; ++h) {
                acc += weights_[h];
                cum_[h] = acc;
            }
            vertex_weight_[v] = acc;
        }
        for (const auto& e : edges_) total_edge_weight_ += e.kappa;
        vertex_cum_.resize(n);
        double acc = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            acc += vertex_weight_[v];
            vertex_cum_[v] = acc;
        }
    }

    std::vector<WeightedEdge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> targets_;
    std::vector<std::uint32_t> edge_ids_;
    std::vector<double> weights_;
    std::vector<double> cum_;
    std::vector<double> vertex_weight_;
    std::vector<double> vertex_cum_;
    double total_edge_weight_ = 0.0;
    std::size_t n_ = 0;
    bool unit_ = false;
};

} // namespace coverlab
