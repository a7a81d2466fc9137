#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "coverlab/degree_sequence.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/generator.hpp"

namespace coverlab {

enum class Regime { A, B, C };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::A: return "A";
        case Regime::B: return "B";
        default: return "C";
    }
}

struct RegimeThresholds {
    double alpha_lo = 0.05;
    double alpha_hi = 0.95;
};

struct RegimeClassification {
    Regime regime = Regime::A;
    double alpha_hat = 0.0; // ln(max(nu2, 1)) / ln M
};

inline RegimeClassification classify_regime(std::size_t M, std::size_t nu2,
                                            const RegimeThresholds& th = {}) {
    if (M < 2) throw invalid_input("classify_regime: M >= 2 required");
    RegimeClassification c;
    c.alpha_hat = std::log(static_cast<double>(std::max<std::size_t>(nu2, 1))) /
                  std::log(static_cast<double>(M));
    if (c.alpha_hat <= th.alpha_lo)
        c.regime = Regime::A;
    else if (c.alpha_hat < th.alpha_hi)
        c.regime = Regime::B;
    else
        c.regime = Regime::C;
    return c;
}

namespace detail {

/// h(k) = 1/(floor((k+1)/2) + 1/(d-2)) + 1/(ceil((k+1)/2) + 1/(d-2)).
inline double phi_bracket(std::uint64_t k, int d) {
    const double rho = 1.0 / static_cast<double>(d - 2);
    const double lo = std::floor((static_cast<double>(k) + 1.0) / 2.0);
    const double hi = std::ceil((static_cast<double>(k) + 1.0) / 2.0);
    return 1.0 / (lo + rho) + 1.0 / (hi + rho);
}

} // namespace detail

/// phi_{alpha,d} = min{ tau : min_k [ (1-alpha) k + (tau/2) h(k) ] >= 1 }.
/// Each per-k constraint is linear in tau, so phi is the max over the
/// finitely many k with (1-alpha) k < 1 of 2 (1 - (1-alpha) k) / h(k).
inline double phi(double alpha, int d) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw invalid_input("phi: alpha in (0, 1) required");
    if (d < 3) throw invalid_input("phi: d >= 3 required");
    double best = 0.0;
    for (std::uint64_t k = 1; static_cast<double>(k) * (1.0 - alpha) < 1.0; ++k) {
        const double tau = 2.0 * (1.0 - (1.0 - alpha) * static_cast<double>(k)) / detail::phi_bracket(k, d);
        best = std::max(best, tau);
    }
    return best;
}

/// Exact-rational phi for alpha = p/q; useful when ties between k matter.
inline boost::rational<long long> phi_rational(long long p, long long q, int d) {
    using rat = boost::rational<long long>;
    if (!(p > 0 && p < q)) throw invalid_input("phi_rational: alpha in (0, 1) required");
    if (d < 3) throw invalid_input("phi_rational: d >= 3 required");
    const rat one_minus_alpha(q - p, q);
    const rat rho(1, d - 2);
    rat best(0);
    for (long long k = 1; rat(k) * one_minus_alpha < rat(1); ++k) {
        const rat lo((k + 1) / 2);
        const rat hi(k / 2 + 1);
        const rat h = rat(1) / (lo + rho) + rat(1) / (hi + rho);
        const rat tau = rat(2) * (rat(1) - one_minus_alpha * rat(k)) / h;
        best = std::max(best, tau);
    }
    return best;
}

struct PredictionInputs {
    std::size_t M = 0;
    std::size_t nu2 = 0;
    std::size_t m = 0;
    int d = 0;
    double xi = 0.0;
    double alpha_hat = 0.0;
};

struct Prediction {
    Regime regime = Regime::A;
    double value = 0.0;    // predicted cover time, steps
    double constant = 0.0; // leading constant, value = constant * scale
    double scale = 0.0;    // M ln M (regimes A, B) or m ln^2 M (regime C)
    PredictionInputs inputs;
};

/// Closed-form cover-time prediction:
///   A: 2(d-1)/(d(d-2)) M ln M
///   B: max{2(d-1)/(d(d-2)), phi_{alpha,d}} M ln M
///   C: m ln^2 M / (-8 ln(1 - xi)), xi = M/m
inline Prediction predict_cover_time(std::size_t M, std::size_t nu2, int d,
                                     const RegimeThresholds& th = {}) {
    if (d < 3) throw invalid_input("predict_cover_time: kernel min degree >= 3 required");
    if (M < 2) throw invalid_input("predict_cover_time: M >= 2 required");
    const auto cls = classify_regime(M, nu2, th);
    Prediction p;
    p.regime = cls.regime;
    p.inputs = {M, nu2, M + nu2,
                d, static_cast<double>(M) / static_cast<double>(M + nu2), cls.alpha_hat};
    const double lnM = std::log(static_cast<double>(M));
    const double base = 2.0 * static_cast<double>(d - 1) /
                        (static_cast<double>(d) * static_cast<double>(d - 2));
    switch (cls.regime) {
        case Regime::A:
            p.constant = base;
            p.scale = static_cast<double>(M) * lnM;
            break;
        case Regime::B:
            p.constant = std::max(base, phi(cls.alpha_hat, d));
            p.scale = static_cast<double>(M) * lnM;
            break;
        case Regime::C: {
            const double one_minus_xi =
                static_cast<double>(nu2) / static_cast<double>(M + nu2);
            p.constant = 1.0 / (-8.0 * std::log(one_minus_xi));
            p.scale = static_cast<double>(M + nu2) * lnM * lnM;
            break;
        }
    }
    p.value = p.constant * p.scale;
    return p;
}

inline Prediction predict_cover_time(const DegreeSequence& seq, const RegimeThresholds& th = {}) {
    if (!seq.has_kernel())
        throw invalid_input("predict_cover_time: sequence has no vertex of degree >= 3");
    return predict_cover_time(seq.kernel_edges(), seq.nu2(), seq.min_kernel_degree(), th);
}

struct GnpPrediction {
    double x = 0.0;           // root of x = 1 - e^{-cx}
    double cover_giant = 0.0; // cx(2-x)/(4(cx - ln c)) n ln^2 n
    double cover_2core = 0.0; // cx^2/(16(cx - ln c)) n ln^2 n
    double nu2_est = 0.0;     // c^2 x^2 e^{-cx} n / 2
    double M_est = 0.0;       // c x^2 (1 - c e^{-cx}) n / 2
};

inline GnpPrediction predict_gnp(double c, double n) {
    if (c <= 1.0) throw invalid_input("predict_gnp: c > 1 required");
    GnpPrediction g;
    g.x = solve_x(c);
    const double cx = c * g.x;
    const double lnn = std::log(n);
    const double denom = cx - std::log(c);
    g.cover_giant = cx * (2.0 - g.x) / (4.0 * denom) * n * lnn * lnn;
    g.cover_2core = c * g.x * g.x / (16.0 * denom) * n * lnn * lnn;
    g.nu2_est = c * c * g.x * g.x * std::exp(-cx) * n / 2.0;
    g.M_est = c * g.x * g.x * (1.0 - c * std::exp(-cx)) * n / 2.0;
    return g;
}

/// Emerging-giant 2-core: (eps/4) n ln^2(eps^3 n).
inline double predict_emerging(double eps, double n) {
    if (eps <= 0.0) throw invalid_input("predict_emerging: eps > 0 required");
    const double l = std::log(eps * eps * eps * n);
    if (l <= 0.0) throw invalid_input("predict_emerging: eps^3 n must exceed 1");
    return eps / 4.0 * n * l * l;
}

} // namespace coverlab
