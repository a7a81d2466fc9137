#pragma once

// Test-side oracles, independent of the library's simulation paths:
// absorbing-chain linear solves, exponential-state exact cover times,
// a symbolic series-parallel reducer, and exhaustive matching enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "coverlab/multigraph.hpp"
#include "coverlab/rng.hpp"
#include "coverlab/transition.hpp"
#include "coverlab/weighted_graph.hpp"

namespace oracles {

using coverlab::Multigraph;
using coverlab::WeightedGraph;

/// Absorbing-chain solve: given the walk on g and a set of absorbing
/// vertices, return for each start the absorption probabilities per
/// absorbing vertex and the expected absorption time.
struct AbsorbingSolve {
    Eigen::MatrixXd absorb_prob; // rows: all vertices, cols: absorbing list
    Eigen::VectorXd expected_time;
};

inline AbsorbingSolve absorbing_solve(const WeightedGraph& g,
                                      const std::vector<std::uint32_t>& absorbing) {
    const auto tm = coverlab::transition_matrix(g, false);
    const std::size_t n = tm.size();
    std::vector<char> is_abs(n, 0);
    for (auto a : absorbing) is_abs[a] = 1;
    std::vector<Eigen::Index> transient;
    for (std::uint32_t v = 0; v < n; ++v)
        if (!is_abs[v]) transient.push_back(v);
    const std::size_t nt = transient.size();
    Eigen::MatrixXd Q(nt, nt);
    Eigen::MatrixXd R(nt, absorbing.size());
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < nt; ++j) Q(i, j) = tm.P(transient[i], transient[j]);
        for (std::size_t j = 0; j < absorbing.size(); ++j)
            R(i, j) = tm.P(transient[i], absorbing[j]);
    }
    const Eigen::MatrixXd fundamental = (Eigen::MatrixXd::Identity(nt, nt) - Q).inverse();
    const Eigen::MatrixXd B = fundamental * R;
    const Eigen::VectorXd T = fundamental * Eigen::VectorXd::Ones(nt);

    AbsorbingSolve out;
    out.absorb_prob = Eigen::MatrixXd::Zero(n, absorbing.size());
    out.expected_time = Eigen::VectorXd::Zero(n);
    for (std::size_t j = 0; j < absorbing.size(); ++j) out.absorb_prob(absorbing[j], j) = 1.0;
    for (std::size_t i = 0; i < nt; ++i) {
        out.absorb_prob.row(transient[i]) = B.row(i);
        out.expected_time(transient[i]) = T(i);
    }
    return out;
}

/// Expected hitting time of `target` from `start`.
inline double hitting_time(const WeightedGraph& g, std::uint32_t start, std::uint32_t target) {
    return absorbing_solve(g, {target}).expected_time(start);
}

/// Exact expected vertex cover time from `start` via the exponential-state
/// chain on (current vertex, visited set). Feasible for n <= ~14.
inline double exact_vertex_cover_time(const WeightedGraph& g, std::uint32_t start) {
    const auto tm = coverlab::transition_matrix(g, false);
    const std::size_t n = tm.size();
    const std::uint32_t full = (1u << n) - 1;
    // E[v][mask]; process masks by decreasing popcount, solving the linear
    // system among states sharing a mask.
    std::vector<std::vector<double>> E(n, std::vector<double>(full + 1, 0.0));
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask <= full; ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) > __builtin_popcount(b);
    });
    for (const auto mask : masks) {
        if (mask == full) continue;
        std::vector<Eigen::Index> members; // states (v, mask) require v in mask
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask & (1u << v)) members.push_back(v);
        if (members.empty()) continue;
        const std::size_t k = members.size();
        Eigen::MatrixXd A = Eigen::MatrixXd::Identity(k, k);
        Eigen::VectorXd b = Eigen::VectorXd::Ones(k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto v = static_cast<std::uint32_t>(members[i]);
            for (std::uint32_t w = 0; w < n; ++w) {
                const double p = tm.P(v, w);
                if (p == 0.0) continue;
                const std::uint32_t next = mask | (1u << w);
                if (next == mask) {
                    const auto j = static_cast<std::size_t>(
                        std::find(members.begin(), members.end(), w) - members.begin());
                    A(i, j) -= p;
                } else {
                    b(i) += p * E[w][next];
                }
            }
        }
        const Eigen::VectorXd x = A.partialPivLu().solve(b);
        for (std::size_t i = 0; i < k; ++i) E[members[i]][mask] = x(i);
    }
    return E[start][1u << start];
}

/// Exact expected edge cover time from `start`: exponential state on the
/// edge set. Feasible for graphs with <= ~14 edges.
inline double exact_edge_cover_time(const WeightedGraph& g, std::uint32_t start) {
    const auto tm = coverlab::transition_matrix(g, false);
    const std::size_t n = tm.size();
    const std::size_t m = g.edge_count();
    const std::uint32_t full = (1u << m) - 1;
    // aggregated transition probabilities per (v, w) may merge parallel
    // edges, so walk transitions are expanded per half-edge instead
    std::vector<std::vector<std::pair<double, std::pair<std::uint32_t, std::uint32_t>>>> moves(n);
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::size_t h = g.halfedge_begin(v); h < g.halfedge_end(v); ++h)
            moves[v].push_back({g.halfedge_weight(h) / g.vertex_weight(v),
                                {g.halfedge_target(h), g.halfedge_edge(h)}});

    std::vector<std::vector<double>> E(n, std::vector<double>(full + 1, 0.0));
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask <= full; ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) > __builtin_popcount(b);
    });
    for (const auto mask : masks) {
        if (mask == full) continue;
        // all vertices are valid states here
        Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
        Eigen::VectorXd b = Eigen::VectorXd::Ones(n);
        for (std::uint32_t v = 0; v < n; ++v) {
            for (const auto& [p, tw] : moves[v]) {
                const auto [w, e] = tw;
                const std::uint32_t next = mask | (1u << e);
                if (next == mask)
                    A(v, w) -= p;
                else
                    b(v) += p * E[w][next];
            }
        }
        const Eigen::VectorXd x = A.partialPivLu().solve(b);
        for (std::uint32_t v = 0; v < n; ++v) E[v][mask] = x(v);
    }
    return E[start][0];
}

/// Random series-parallel two-terminal network with its exact resistance
/// tracked through the composition. Realized as a weighted graph whose edge
/// conductances are arbitrary positive reals.
struct SpNetwork {
    std::vector<coverlab::WeightedEdge> edges;
    std::uint32_t s = 0, t = 1;
    std::uint32_t next_vertex = 2;
    double resistance = 0.0;
};

inline SpNetwork random_sp_network(coverlab::Rng& rng, int depth = 4) {
    // returns edges between s and t plus the exact two-terminal resistance
    std::function<SpNetwork(int)> build = [&](int d) -> SpNetwork {
        SpNetwork net;
        if (d == 0 || rng.below(4) == 0) {
            const double kappa = 0.25 + 2.0 * rng.next_double();
            net.edges.push_back({0, 1, kappa});
            net.next_vertex = 2;
            net.resistance = 1.0 / kappa;
            return net;
        }
        SpNetwork a = build(d - 1);
        SpNetwork b = build(d - 1);
        const bool series = rng.coin();
        // relabel b's internals after a's
        auto relabel = [&](SpNetwork& sub, std::uint32_t s_id, std::uint32_t t_id,
                           std::uint32_t base) {
            std::uint32_t used = base;
            for (auto& e : sub.edges) {
                auto map = [&](std::uint32_t v) -> std::uint32_t {
                    if (v == sub.s) return s_id;
                    if (v == sub.t) return t_id;
                    return base + v - 2; // internals are 2..next_vertex-1
                };
                e.u = map(e.u);
                e.v = map(e.v);
            }
            used = base + (sub.next_vertex - 2);
            return used;
        };
        if (series) {
            // a: s=0 -> mid, b: mid -> t=1
            const std::uint32_t mid = 2;
            std::uint32_t base = 3;
            base = relabel(a, 0, mid, base);
            base = relabel(b, mid, 1, base);
            net.edges = a.edges;
            net.edges.insert(net.edges.end(), b.edges.begin(), b.edges.end());
            net.next_vertex = base;
            net.resistance = a.resistance + b.resistance;
        } else {
            std::uint32_t base = 2;
            base = relabel(a, 0, 1, base);
            base = relabel(b, 0, 1, base);
            net.edges = a.edges;
            net.edges.insert(net.edges.end(), b.edges.begin(), b.edges.end());
            net.next_vertex = base;
            net.resistance = 1.0 / (1.0 / a.resistance + 1.0 / b.resistance);
        }
        return net;
    };
    return build(depth);
}

/// All perfect matchings of the points of the given degree sequence,
/// as canonical sorted pair lists.
inline void enumerate_matchings(std::uint32_t points,
                                std::function<void(const std::vector<std::pair<std::uint32_t, std::uint32_t>>&)> yield) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> current;
    std::vector<char> used(points, 0);
    std::function<void()> rec = [&]() {
        std::uint32_t first = points;
        for (std::uint32_t p = 0; p < points; ++p)
            if (!used[p]) {
                first = p;
                break;
            }
        if (first == points) {
            yield(current);
            return;
        }
        used[first] = 1;
        for (std::uint32_t q = first + 1; q < points; ++q) {
            if (used[q]) continue;
            used[q] = 1;
            current.emplace_back(first, q);
            rec();
            current.pop_back();
            used[q] = 0;
        }
        used[first] = 0;
    };
    rec();
}

} // namespace oracles
