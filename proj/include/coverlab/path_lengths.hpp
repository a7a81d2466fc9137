#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/rng.hpp"

namespace coverlab {

/// Path-length sampling for edge subdivision. Both samplers draw
/// (l_1, ..., l_M), l_i >= 1, sum l_i = nu2 + M, uniformly over all
/// binom(nu2 + M - 1, M - 1) compositions; they differ only in mechanism.

/// Stars and bars: a uniform (M-1)-subset of the nu2+M-1 slots between unit
/// stars marks the part boundaries.
inline std::vector<std::uint32_t> sample_path_lengths_uniform(std::size_t M, std::size_t nu2,
                                                              Rng& rng) {
    if (M < 1) throw invalid_input("need at least one part");
    if (M == 1) return {static_cast<std::uint32_t>(nu2 + 1)};
    const std::uint64_t slots = nu2 + M - 1;

    // Floyd's subset sampling: uniform (M-1)-subset of [1, slots].
    std::set<std::uint64_t> bars;
    for (std::uint64_t j = slots - (M - 1) + 1; j <= slots; ++j) {
        const std::uint64_t r = 1 + rng.below(j);
        if (!bars.insert(r).second) bars.insert(j);
    }
    std::vector<std::uint32_t> lengths;
    lengths.reserve(M);
    std::uint64_t prev = 0;
    for (std::uint64_t b : bars) {
        lengths.push_back(static_cast<std::uint32_t>(b - prev));
        prev = b;
    }
    lengths.push_back(static_cast<std::uint32_t>(slots + 1 - prev));
    return lengths;
}

/// Conditioned-geometric view: l_1 is drawn from its exact marginal
/// Pr(l_1 = z) = binom(s - z - 1, k - 2) / binom(s - 1, k - 1) for a
/// composition of s into k parts, then the remainder is recursed on.
/// Same distribution as the stars-and-bars sampler, O(nu2 + M) total.
inline std::vector<std::uint32_t> sample_path_lengths_geometric(std::size_t M, std::size_t nu2,
                                                                Rng& rng) {
    if (M < 1) throw invalid_input("need at least one part");
    std::vector<std::uint32_t> lengths;
    lengths.reserve(M);
    std::uint64_t s = nu2 + M; // remaining total
    std::uint64_t k = M;       // remaining parts
    while (k > 1) {
        const double u = rng.next_double();
        const std::uint64_t zmax = s - k + 1;
        std::uint64_t z = 1;
        double p = static_cast<double>(k - 1) / static_cast<double>(s - 1);
        double acc = p;
        while (acc < u && z < zmax) {
            p *= static_cast<double>(s - z - k + 1) / static_cast<double>(s - z - 1);
            ++z;
            acc += p;
        }
        lengths.push_back(static_cast<std::uint32_t>(z));
        s -= z;
        --k;
    }
    lengths.push_back(static_cast<std::uint32_t>(s));
    return lengths;
}

struct PathLengthTailBounds {
    double a_m = 0.0;        // 4 (M + nu2) ln M / M: w.h.p. no length exceeds this
    std::uint64_t b_m = 1;   // ceil((M + nu2) / (M^2 ln M)): w.h.p. no length below
};

inline PathLengthTailBounds path_length_tail_bounds(std::size_t M, std::size_t nu2) {
    if (M < 2) throw invalid_input("tail bounds need M >= 2");
    PathLengthTailBounds b;
    const double lnM = std::log(static_cast<double>(M));
    b.a_m = 4.0 * static_cast<double>(M + nu2) * lnM / static_cast<double>(M);
    b.b_m = static_cast<std::uint64_t>(
        std::ceil(static_cast<double>(M + nu2) / (static_cast<double>(M) * static_cast<double>(M) * lnM)));
    if (b.b_m < 1) b.b_m = 1;
    return b;
}

/// Diagnostic: how many of the given lengths violate b_m <= l <= a_m.
inline std::size_t count_tail_violations(const std::vector<std::uint32_t>& lengths,
                                         const PathLengthTailBounds& b) {
    std::size_t bad = 0;
    for (auto l : lengths)
        if (l < b.b_m || static_cast<double>(l) > b.a_m) ++bad;
    return bad;
}

/// binom(nu2 + M - 1, M - 1), the number of compositions; double precision.
inline double composition_count(std::size_t M, std::size_t nu2) {
    double c = 1.0;
    for (std::size_t i = 1; i <= M - 1; ++i)
        c *= static_cast<double>(nu2 + i) / static_cast<double>(i);
    return c;
}

} // namespace coverlab
