#pragma once

#include <cmath>
#include <cstdint>

#include <Eigen/Dense>

#include "coverlab/errors.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

inline constexpr std::size_t kDenseMatrixLimit = 3000;

/// Row-stochastic transition matrix of the weighted walk, with its
/// stationary vector pi_v = kappa(v) / kappa(V).
struct TransitionMatrix {
    Eigen::MatrixXd P;
    Eigen::VectorXd pi;
    bool lazy = false;

    std::size_t size() const { return static_cast<std::size_t>(P.rows()); }

    double max_row_sum_error() const {
        return (P.rowwise().sum() - Eigen::VectorXd::Ones(P.rows())).cwiseAbs().maxCoeff();
    }

    double stationarity_error() const { // || pi P - pi ||_inf
        return ((pi.transpose() * P).transpose() - pi).cwiseAbs().maxCoeff();
    }

    double detailed_balance_error() const { // max |pi_x P(x,y) - pi_y P(y,x)|
        const Eigen::MatrixXd Q = pi.asDiagonal() * P;
        return (Q - Q.transpose()).cwiseAbs().maxCoeff();
    }
};

inline TransitionMatrix transition_matrix(const WeightedGraph& g, bool lazy,
                                          std::size_t dense_limit = kDenseMatrixLimit) {
    const std::size_t n = g.vertex_count();
    if (n > dense_limit)
        throw size_guard_error("transition_matrix: graph exceeds the dense-matrix limit");
    if (!g.connected()) throw invalid_input("transition_matrix: graph must be connected");
    TransitionMatrix tm;
    tm.lazy = lazy;
    tm.P = Eigen::MatrixXd::Zero(n, n);
    tm.pi = Eigen::VectorXd::Zero(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        const double kv = g.vertex_weight(v);
        tm.pi[v] = g.stationary(v);
        for (std::size_t h = g.halfedge_begin(v); h < g.halfedge_end(v); ++h)
            tm.P(v, g.halfedge_target(h)) += g.halfedge_weight(h) / kv;
    }
    if (lazy) {
        tm.P *= 0.5;
        tm.P.diagonal().array() += 0.5;
    }
    return tm;
}

} // namespace coverlab
