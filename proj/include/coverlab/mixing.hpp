#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

#include "coverlab/transition.hpp"

namespace coverlab {

struct MixingTimeResult {
    std::uint64_t steps = 0;
    bool capped = false; // cap reached without mixing (e.g. periodic chain)
    double final_distance = 0.0;
};

/// Least t with max_{u,x} |P^t(u,x) - pi_x| <= epsilon, by repeated matrix
/// application. Returns capped=true if the cap is hit first.
inline MixingTimeResult tv_mixing_time(const TransitionMatrix& tm, double epsilon,
                                       std::uint64_t cap = 100000) {
    const auto n = tm.P.rows();
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
    const Eigen::RowVectorXd pi_row = tm.pi.transpose();
    MixingTimeResult res;
    double dist = (A - Eigen::VectorXd::Ones(n) * pi_row).cwiseAbs().maxCoeff();
    std::uint64_t t = 0;
    while (dist > epsilon) {
        if (t >= cap) {
            res.capped = true;
            break;
        }
        A = A * tm.P;
        ++t;
        dist = (A - Eigen::VectorXd::Ones(n) * pi_row).cwiseAbs().maxCoeff();
    }
    res.steps = t;
    res.final_distance = dist;
    return res;
}

/// The mixing bound (pi_x / pi_u)^{1/2} (1 - Phi^2/2)^t. Valid for a lazy
/// chain when Phi is that chain's own conductance; the lazy chain's
/// conductance is half the graph conductance.
inline double js_mixing_bound(double phi, double pi_x, double pi_u, std::uint64_t t) {
    return std::sqrt(pi_x / pi_u) * std::pow(1.0 - phi * phi / 2.0, static_cast<double>(t));
}

struct JsCheckResult {
    bool holds = true;
    double phi_graph = 0.0;     // exact graph conductance
    double phi_chain = 0.0;     // conductance of the lazy chain = phi_graph / 2
    double max_ratio = 0.0;     // max over (u,x,t) of |P^t - pi| / bound
    std::uint64_t t_checked = 0;
};

/// Verify |P^t(u,x) - pi_x| <= js_mixing_bound for the lazy walk on g, for
/// every u, x and every t <= t_max, against exact matrix powers.
inline JsCheckResult js_check(const WeightedGraph& g, std::uint64_t t_max,
                              double phi_graph_exact) {
    const TransitionMatrix tm = transition_matrix(g, /*lazy=*/true);
    const auto n = tm.P.rows();
    JsCheckResult res;
    res.phi_graph = phi_graph_exact;
    res.phi_chain = phi_graph_exact / 2.0;
    res.t_checked = t_max;
    const double decay = 1.0 - res.phi_chain * res.phi_chain / 2.0;
    Eigen::MatrixXd A = tm.P;
    double decay_t = decay;
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        for (Eigen::Index u = 0; u < n; ++u) {
            for (Eigen::Index x = 0; x < n; ++x) {
                const double lhs = std::abs(A(u, x) - tm.pi[x]);
                const double bound = std::sqrt(tm.pi[x] / tm.pi[u]) * decay_t;
                const double ratio = lhs / bound;
                if (ratio > res.max_ratio) res.max_ratio = ratio;
                if (lhs > bound * (1.0 + 1e-9)) res.holds = false;
            }
        }
        if (t < t_max) {
            A = A * tm.P;
            decay_t *= decay;
        }
    }
    return res;
}

} // namespace coverlab
