#pragma once

#include <cstdint>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/stats.hpp"
#include "coverlab/walk.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

/// A star of paths: hub vertex 0, k unit-weight paths of the given lengths
/// hanging off it, leaf of path i recorded in leaves[i].
struct StarOfPaths {
    WeightedGraph graph;
    std::uint32_t hub = 0;
    std::vector<std::uint32_t> leaves;
    std::vector<std::uint32_t> lengths;
};

inline StarOfPaths make_star_of_paths(const std::vector<std::uint32_t>& lengths) {
    if (lengths.empty()) throw invalid_input("star needs at least one path");
    std::size_t n = 1;
    for (auto l : lengths) {
        if (l < 1) throw invalid_input("path lengths must be >= 1");
        n += l;
    }
    std::vector<WeightedEdge> edges;
    StarOfPaths star;
    star.lengths = lengths;
    std::uint32_t next = 1;
    for (auto l : lengths) {
        std::uint32_t prev = 0;
        for (std::uint32_t i = 0; i < l; ++i) {
            edges.push_back({prev, next, 1.0});
            prev = next++;
        }
        star.leaves.push_back(prev);
    }
    star.graph = WeightedGraph(n, std::move(edges));
    return star;
}

/// The law of which leaf a walk from the hub reaches first:
/// proportional to 1/length, i.e. to the path conductances.
inline std::vector<double> star_exit_law(const std::vector<std::uint32_t>& lengths) {
    double denom = 0.0;
    for (auto l : lengths) denom += 1.0 / static_cast<double>(l);
    std::vector<double> law;
    law.reserve(lengths.size());
    for (auto l : lengths) law.push_back(1.0 / static_cast<double>(l) / denom);
    return law;
}

/// Expected time for the walk from the hub to reach a leaf:
/// (l_1 + ... + l_k) / (1/l_1 + ... + 1/l_k).
inline double star_hitting_formula(const std::vector<std::uint32_t>& lengths) {
    double num = 0.0, denom = 0.0;
    for (auto l : lengths) {
        num += static_cast<double>(l);
        denom += 1.0 / static_cast<double>(l);
    }
    return num / denom;
}

struct StarWalkResult {
    std::vector<double> exit_fraction; // per path
    Summary steps;                     // time to first leaf
};

/// Simulate walks from the hub until a leaf is hit; report per-path exit
/// frequencies and the hitting-time summary.
inline StarWalkResult star_walk_experiment(const std::vector<std::uint32_t>& lengths,
                                           std::size_t trials, std::uint64_t seed,
                                           unsigned threads = 1) {
    const StarOfPaths star = make_star_of_paths(lengths);
    std::vector<std::int32_t> leaf_path(star.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < star.leaves.size(); ++i)
        leaf_path[star.leaves[i]] = static_cast<std::int32_t>(i);

    std::vector<double> times(trials);
    std::vector<std::uint32_t> exits(trials);
    for_each_trial(trials, threads, seed, 0, [&](std::size_t t, Rng& rng) {
        std::uint32_t cur = star.hub;
        std::uint64_t steps_taken = 0;
        while (leaf_path[cur] < 0) {
            cur = step(star.graph, cur, false, rng);
            ++steps_taken;
        }
        times[t] = static_cast<double>(steps_taken);
        exits[t] = static_cast<std::uint32_t>(leaf_path[cur]);
    });

    StarWalkResult res;
    res.exit_fraction.assign(lengths.size(), 0.0);
    for (auto e : exits) res.exit_fraction[e] += 1.0;
    for (auto& f : res.exit_fraction) f /= static_cast<double>(trials);
    res.steps = summarize(times);
    return res;
}

} // namespace coverlab
