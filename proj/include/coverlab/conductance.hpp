#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "coverlab/errors.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

inline constexpr std::size_t kConductanceExactLimit = 22;

struct ConductanceResult {
    double phi = 0.0;
    std::vector<std::uint32_t> argmin; // minimizing set S with kappa(S) <= kappa(V)/2
    bool exact = true;                 // false: sweep-cut value, an upper bound on phi
};

/// Exact conductance Phi = min over kappa(S) <= kappa(V)/2 of
/// kappa(boundary S) / kappa(S), by subset enumeration in Gray-code order.
/// Refuses graphs above kConductanceExactLimit vertices.
inline ConductanceResult conductance_exact(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kConductanceExactLimit)
        throw size_guard_error("conductance_exact: more than 22 vertices; use the sweep-cut bound");
    if (n < 2) throw invalid_input("conductance needs at least 2 vertices");

    // dense symmetric weight matrix without loops (loops never cross a cut
    // but do count toward kappa(S))
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> loop_weight(n, 0.0);
    for (const auto& e : g.edges()) {
        if (e.u == e.v)
            loop_weight[e.u] += 2.0 * e.kappa;
        else {
            W(e.u, e.v) += e.kappa;
            W(e.v, e.u) += e.kappa;
        }
    }
    const double half_total = 0.5 * g.total_vertex_weight();

    std::vector<char> in(n, 0);
    double vol = 0.0; // kappa(S)
    double cut = 0.0; // kappa(boundary S)
    ConductanceResult best;
    best.phi = std::numeric_limits<double>::infinity();
    const std::uint64_t limit = 1ULL << n;
    for (std::uint64_t it = 1; it < limit; ++it) {
        // Gray code: flip the trailing-zero bit of it
        const int b = __builtin_ctzll(it);
        const auto v = static_cast<std::uint32_t>(b);
        if (!in[v]) {
            in[v] = 1;
            vol += g.vertex_weight(v);
            for (std::uint32_t w = 0; w < n; ++w)
                cut += in[w] && w != v ? -W(v, w) : W(v, w);
        } else {
            in[v] = 0;
            vol -= g.vertex_weight(v);
            for (std::uint32_t w = 0; w < n; ++w)
                cut += in[w] ? W(v, w) : -W(v, w);
        }
        if (vol <= 0.0 || vol > half_total) continue;
        const double phi = cut / vol;
        if (phi < best.phi) {
            best.phi = phi;
            best.argmin.clear();
            for (std::uint32_t w = 0; w < n; ++w)
                if (in[w]) best.argmin.push_back(w);
        }
    }
    return best;
}

/// Spectral sweep cut: order vertices by the second eigenvector of the
/// symmetrized walk matrix and take the best prefix cut. This is an upper
/// bound on the true conductance, reported as non-exact.
inline ConductanceResult conductance_sweep(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw invalid_input("conductance needs at least 2 vertices");
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
    for (std::uint32_t v = 0; v < n; ++v)
        for (std::size_t h = g.halfedge_begin(v); h < g.halfedge_end(v); ++h) {
            const auto w = g.halfedge_target(h);
            S(v, w) += g.halfedge_weight(h) /
                       std::sqrt(g.vertex_weight(v) * g.vertex_weight(w));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    const Eigen::VectorXd f = es.eigenvectors().col(n - 2); // second-largest eigenvalue
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        return f[a] / std::sqrt(g.vertex_weight(a)) < f[b] / std::sqrt(g.vertex_weight(b));
    });

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges())
        if (e.u != e.v) {
            W(e.u, e.v) += e.kappa;
            W(e.v, e.u) += e.kappa;
        }
    const double half_total = 0.5 * g.total_vertex_weight();
    std::vector<char> in(n, 0);
    double vol = 0.0, cut = 0.0;
    ConductanceResult best;
    best.exact = false;
    best.phi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto v = order[i];
        in[v] = 1;
        vol += g.vertex_weight(v);
        for (std::uint32_t w = 0; w < n; ++w)
            cut += in[w] && w != v ? -W(v, w) : W(v, w);
        const double volc = g.total_vertex_weight() - vol;
        const double phi = cut / std::min(vol, volc);
        if ((vol <= half_total || volc <= half_total) && phi < best.phi) {
            best.phi = phi;
            best.argmin.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(i + 1));
            if (vol > half_total) { // report the complement side
                best.argmin.assign(order.begin() + static_cast<std::ptrdiff_t>(i + 1), order.end());
            }
            std::sort(best.argmin.begin(), best.argmin.end());
        }
    }
    return best;
}

} // namespace coverlab
