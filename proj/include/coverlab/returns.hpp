#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "coverlab/errors.hpp"
#include "coverlab/transition.hpp"

namespace coverlab {

/// Return probabilities r_t = (P^t)_{vv} for t = 0..T-1 and their
/// generating polynomial R_T(z) = sum r_t z^t; R_v = R_T(1).
struct ReturnSeries {
    std::uint32_t v = 0;
    std::uint64_t T = 0;
    std::vector<double> r;

    double R_v() const {
        double s = 0.0;
        for (double x : r) s += x;
        return s;
    }

    /// Horner evaluation of R_T(z).
    std::complex<double> evaluate(std::complex<double> z) const {
        std::complex<double> acc(0.0, 0.0);
        for (auto it = r.rbegin(); it != r.rend(); ++it) acc = acc * z + *it;
        return acc;
    }
};

inline ReturnSeries return_series(const TransitionMatrix& tm, std::uint32_t v, std::uint64_t T) {
    if (T < 1) throw invalid_input("return_series: T >= 1 required");
    const auto n = tm.P.rows();
    if (v >= static_cast<std::uint32_t>(n)) throw invalid_input("return_series: vertex out of range");
    ReturnSeries rs;
    rs.v = v;
    rs.T = T;
    rs.r.reserve(T);
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(n);
    row[v] = 1.0;
    rs.r.push_back(1.0);
    for (std::uint64_t t = 1; t < T; ++t) {
        row = row * tm.P;
        rs.r.push_back(row[v]);
    }
    return rs;
}

/// min |R_T(z)| over k equally spaced points of the circle |z| = 1 + lambda.
inline double min_modulus_on_circle(const ReturnSeries& rs, double lambda, std::size_t k = 720) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
        const double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(k);
        const std::complex<double> z = (1.0 + lambda) * std::complex<double>(std::cos(ang), std::sin(ang));
        best = std::min(best, std::abs(rs.evaluate(z)));
    }
    return best;
}

struct FirstVisitPrediction {
    double probability = 1.0;
    double p_v = 0.0;
    bool t_pi_warning = false; // T pi_v > 0.1: the small-T pi_v regime is strained
};

/// Predicted unvisit probability (1 + p_v)^{-t} with p_v = pi_v / R_v.
/// The correction terms psi_1, psi_2 (bounded by O(T pi_v)) are dropped;
/// comparisons against simulation must budget tolerance for that.
inline FirstVisitPrediction first_visit_prediction(double pi_v, double R_v, std::uint64_t t,
                                                   std::uint64_t T) {
    FirstVisitPrediction out;
    out.p_v = pi_v / R_v;
    out.probability = std::pow(1.0 + out.p_v, -static_cast<double>(t));
    out.t_pi_warning = static_cast<double>(T) * pi_v > 0.1;
    return out;
}

} // namespace coverlab
