#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "coverlab/errors.hpp"
#include "coverlab/transition.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

namespace detail {

/// Weighted Laplacian (loops dropped: they carry no current).
inline Eigen::MatrixXd laplacian(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        if (e.u == e.v) continue;
        L(e.u, e.u) += e.kappa;
        L(e.v, e.v) += e.kappa;
        L(e.u, e.v) -= e.kappa;
        L(e.v, e.u) -= e.kappa;
    }
    return L;
}

} // namespace detail

/// Two-point effective resistance with per-edge resistance 1/kappa, by a
/// grounded Laplacian solve.
inline double effective_resistance(const WeightedGraph& g, std::uint32_t u, std::uint32_t v,
                                   std::size_t dense_limit = kDenseMatrixLimit) {
    const std::size_t n = g.vertex_count();
    if (n > dense_limit) throw size_guard_error("effective_resistance: dense-matrix limit");
    if (u >= n || v >= n) throw invalid_input("effective_resistance: vertex out of range");
    if (u == v) return 0.0;
    if (!g.connected()) throw invalid_input("effective_resistance: graph must be connected");

    // ground v: delete its row/column, solve L' x = e_u
    const Eigen::MatrixXd L = detail::laplacian(g);
    std::vector<Eigen::Index> keep;
    keep.reserve(n - 1);
    for (std::uint32_t i = 0; i < n; ++i)
        if (i != v) keep.push_back(i);
    Eigen::MatrixXd Lr(n - 1, n - 1);
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b) Lr(a, b) = L(keep[a], keep[b]);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n - 1);
    for (std::size_t a = 0; a < keep.size(); ++a)
        if (keep[a] == u) rhs[a] = 1.0;
    const Eigen::VectorXd x = Lr.ldlt().solve(rhs);
    for (std::size_t a = 0; a < keep.size(); ++a)
        if (keep[a] == u) return x[a];
    throw invalid_input("effective_resistance: unreachable");
}

/// All-pairs effective resistances via the Laplacian pseudo-inverse:
/// R(u,v) = L+(u,u) + L+(v,v) - 2 L+(u,v).
inline Eigen::MatrixXd effective_resistance_matrix(const WeightedGraph& g,
                                                   std::size_t dense_limit = kDenseMatrixLimit) {
    const std::size_t n = g.vertex_count();
    if (n > dense_limit) throw size_guard_error("effective_resistance_matrix: dense-matrix limit");
    if (!g.connected()) throw invalid_input("effective_resistance_matrix: graph must be connected");
    const Eigen::MatrixXd L = detail::laplacian(g);
    const Eigen::MatrixXd J = Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
    const Eigen::MatrixXd Lplus = (L + J).inverse() - J;
    Eigen::MatrixXd R(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            R(a, b) = Lplus(a, a) + Lplus(b, b) - 2.0 * Lplus(a, b);
    return R;
}

/// Commute time K(u,v) = (total vertex weight) * R_eff(u,v); for unit
/// weights this is the familiar 2 |E| R_eff.
inline double commute_time(const WeightedGraph& g, std::uint32_t u, std::uint32_t v) {
    return g.total_vertex_weight() * effective_resistance(g, u, v);
}

/// Cover-time lower bound (1/2) K_S ln |S| for a given set S, with
/// K_S = min over pairs in S of the commute time.
inline double matthews_lower_bound(const WeightedGraph& g, const std::vector<std::uint32_t>& S) {
    if (S.size() < 2) throw invalid_input("matthews_lower_bound: |S| >= 2 required");
    const Eigen::MatrixXd R = effective_resistance_matrix(g);
    double kmin = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a + 1; b < S.size(); ++b)
            kmin = std::min(kmin, g.total_vertex_weight() * R(S[a], S[b]));
    return 0.5 * kmin * std::log(static_cast<double>(S.size()));
}

struct MatthewsBest {
    double bound = 0.0;
    std::vector<std::uint32_t> set;
};

/// max over all S of (1/2) K_S ln |S|, by subset enumeration (n <= 20).
inline MatthewsBest matthews_best_bound(const WeightedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw size_guard_error("matthews_best_bound: subset enumeration limited to 20");
    if (n < 2) throw invalid_input("matthews_best_bound: need at least 2 vertices");
    const Eigen::MatrixXd R = effective_resistance_matrix(g);
    const double cw = g.total_vertex_weight();
    MatthewsBest best;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        double kmin = std::numeric_limits<double>::infinity();
        for (std::uint32_t a = 0; a < n; ++a) {
            if (!(mask & (1ULL << a))) continue;
            for (std::uint32_t b = a + 1; b < n; ++b) {
                if (!(mask & (1ULL << b))) continue;
                kmin = std::min(kmin, cw * R(a, b));
            }
        }
        const double bound = 0.5 * kmin * std::log(static_cast<double>(__builtin_popcountll(mask)));
        if (bound > best.bound) {
            best.bound = bound;
            best.set.clear();
            for (std::uint32_t a = 0; a < n; ++a)
                if (mask & (1ULL << a)) best.set.push_back(a);
        }
    }
    return best;
}

} // namespace coverlab
