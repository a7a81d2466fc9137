#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "coverlab/degree_sequence.hpp"
#include "coverlab/errors.hpp"
#include "coverlab/kernel.hpp"
#include "coverlab/multigraph.hpp"
#include "coverlab/pairing.hpp"
#include "coverlab/path_lengths.hpp"
#include "coverlab/rng.hpp"

namespace coverlab {

struct GdSample {
    SubdividedGraph sub; // kernel + sampled path lengths
    Multigraph graph;    // the expanded graph G_d
};

/// The kernel-first pipeline: sample the kernel as a configuration-model
/// multigraph on the degrees >= 3, then distribute the nu2 degree-2 vertices
/// over its edges via a uniform composition. Never produces pure-cycle
/// components, and the output degree multiset equals the input sequence.
inline GdSample sample_G_d_detailed(const DegreeSequence& seq, Rng& rng) {
    if (!seq.has_kernel())
        throw invalid_input("sample_G_d: sequence has no vertex of degree >= 3");
    GdSample out;
    const Pairing pairing = sample_pairing(seq.kernel_degrees(), rng);
    out.sub.kernel = pairing_to_multigraph(pairing);
    out.sub.lengths =
        sample_path_lengths_uniform(out.sub.kernel.edge_count(), seq.nu2(), rng);
    out.graph = subdivide(out.sub.kernel, out.sub.lengths);
    return out;
}

inline Multigraph sample_G_d(const DegreeSequence& seq, Rng& rng) {
    return sample_G_d_detailed(seq, rng).graph;
}

/// G(n, p) by skip sampling over the C(n, 2) vertex pairs.
inline Multigraph sample_gnp(std::size_t n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw invalid_input("sample_gnp: p outside [0, 1]");
    Multigraph g(n);
    if (n < 2 || p == 0.0) return g;
    if (p == 1.0) {
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    const double log1mp = std::log1p(-p);
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    std::uint64_t idx = 0;
    while (true) {
        const double u = rng.next_double_open();
        const double skip = std::floor(std::log(u) / log1mp);
        if (skip >= static_cast<double>(pairs - idx)) break;
        idx += static_cast<std::uint64_t>(skip);
        // invert idx -> (row u, col v), row-major over u < v
        std::uint64_t lo = 0, hi = n - 1;
        while (lo < hi) { // smallest r with (r+1) block end > idx
            const std::uint64_t mid = (lo + hi) / 2;
            const std::uint64_t end = (mid + 1) * (2 * n - mid - 2) / 2;
            if (end > idx)
                hi = mid;
            else
                lo = mid + 1;
        }
        const std::uint64_t row = lo;
        const std::uint64_t before = row * (2 * n - row - 1) / 2;
        const std::uint64_t col = row + 1 + (idx - before);
        g.add_edge(static_cast<std::uint32_t>(row), static_cast<std::uint32_t>(col));
        ++idx;
        if (idx >= pairs) break;
    }
    return g;
}

/// The positive root of x = 1 - e^{-cx} for c > 1, to 1e-12. Bisection on
/// f(x) = x - 1 + e^{-cx}, which is negative near 0 and positive at 1.
inline double solve_x(double c) {
    if (c <= 1.0) throw invalid_input("solve_x: needs c > 1");
    double lo = 1e-15, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = mid - 1.0 + std::exp(-c * mid);
        if (f < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace coverlab
