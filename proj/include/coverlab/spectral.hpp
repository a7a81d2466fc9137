#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "coverlab/errors.hpp"
#include "coverlab/transition.hpp"

namespace coverlab {

struct SpectralGapResult {
    double gap = 0.0;        // 1 - lambda_2 (second-largest eigenvalue)
    double lambda2 = 0.0;
    double lambda_min = 0.0; // reported separately for laziness diagnostics
};

/// Spectral gap of a reversible chain via the symmetrization
/// D^{1/2} P D^{-1/2}, D = diag(pi). Rejects chains violating detailed
/// balance beyond 1e-8.
inline SpectralGapResult spectral_gap(const TransitionMatrix& tm) {
    if (tm.detailed_balance_error() > 1e-8)
        throw invalid_input("spectral_gap: chain is not reversible");
    const auto n = tm.P.rows();
    Eigen::VectorXd sqrt_pi = tm.pi.cwiseSqrt();
    Eigen::MatrixXd S = sqrt_pi.asDiagonal() * tm.P * sqrt_pi.cwiseInverse().asDiagonal();
    S = 0.5 * (S + S.transpose()); // clean up rounding asymmetry
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    const Eigen::VectorXd& ev = es.eigenvalues(); // ascending
    SpectralGapResult res;
    res.lambda_min = ev[0];
    res.lambda2 = ev[n - 2];
    res.gap = 1.0 - res.lambda2;
    return res;
}

/// Tail bound on visit counts: Pr(Z_t - t pi(A) >= gamma) is at most
/// (1 + gamma theta / 10t) N_q exp(-gamma^2 theta / 20t), where theta is the
/// spectral gap and N_q = ||q / sqrt(pi)||_2 for the start distribution q.
inline double gillman_tail_bound(double theta, double nq, double t, double gamma) {
    if (theta <= 0.0 || theta > 1.0) throw invalid_input("gillman: spectral gap outside (0, 1]");
    if (gamma < 0.0) throw invalid_input("gillman: gamma must be >= 0");
    return (1.0 + gamma * theta / (10.0 * t)) * nq * std::exp(-gamma * gamma * theta / (20.0 * t));
}

/// N_q for a point-mass start at x.
inline double gillman_nq_point_mass(double pi_x) { return 1.0 / std::sqrt(pi_x); }

} // namespace coverlab
