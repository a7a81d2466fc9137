#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/chi_squared.hpp>

#include "coverlab/errors.hpp"

namespace coverlab {

struct Summary {
    std::size_t count = 0;
    double mean = 0.0;
    double sd = 0.0;            // sample standard deviation
    std::optional<double> se;   // absent when count < 2
    double min = 0.0;
    double max = 0.0;
};

inline Summary summarize(std::span<const double> xs) {
    Summary s;
    s.count = xs.size();
    if (xs.empty()) return s;
    double sum = 0.0;
    s.min = xs[0];
    s.max = xs[0];
    for (double x : xs) {
        sum += x;
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
    }
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() >= 2) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
        s.se = s.sd / std::sqrt(static_cast<double>(xs.size()));
    }
    return s;
}

inline double chi_square_p_value(double statistic, std::size_t dof) {
    if (dof == 0) throw invalid_input("chi-square with zero degrees of freedom");
    boost::math::chi_squared dist(static_cast<double>(dof));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

/// Goodness of fit of observed counts to given cell probabilities.
inline ChiSquareResult chi_square_gof(std::span<const std::uint64_t> counts,
                                      std::span<const double> probs) {
    if (counts.size() != probs.size() || counts.size() < 2)
        throw invalid_input("chi_square_gof: need matching cells, >= 2");
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    ChiSquareResult r;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double expected = probs[i] * static_cast<double>(total);
        const double d = static_cast<double>(counts[i]) - expected;
        r.statistic += d * d / expected;
    }
    r.dof = counts.size() - 1;
    r.p_value = chi_square_p_value(r.statistic, r.dof);
    return r;
}

/// Two-sample chi-square: are two count vectors draws from one distribution?
inline ChiSquareResult chi_square_two_sample(std::span<const std::uint64_t> a,
                                             std::span<const std::uint64_t> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw invalid_input("chi_square_two_sample: need matching cells, >= 2");
    double ta = 0.0;
    double tb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ta += static_cast<double>(a[i]);
        tb += static_cast<double>(b[i]);
    }
    ChiSquareResult r;
    std::size_t used = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double row = static_cast<double>(a[i]) + static_cast<double>(b[i]);
        if (row == 0.0) continue;
        ++used;
        const double ea = row * ta / (ta + tb);
        const double eb = row * tb / (ta + tb);
        const double da = static_cast<double>(a[i]) - ea;
        const double db = static_cast<double>(b[i]) - eb;
        r.statistic += da * da / ea + db * db / eb;
    }
    if (used < 2) throw invalid_input("chi_square_two_sample: all cells empty");
    r.dof = used - 1;
    r.p_value = chi_square_p_value(r.statistic, r.dof);
    return r;
}

/// One-sided Clopper-Pearson upper confidence limit for a binomial proportion.
inline double clopper_pearson_upper(std::uint64_t successes, std::uint64_t trials,
                                    double confidence = 0.999) {
    using boost::math::binomial_distribution;
    return binomial_distribution<double>::find_upper_bound_on_p(
        static_cast<double>(trials), static_cast<double>(successes), 1.0 - confidence);
}

inline double binomial_sigma(double p, std::uint64_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

} // namespace coverlab
