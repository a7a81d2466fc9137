#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/rng.hpp"
#include "coverlab/stats.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

struct WalkConfig {
    bool lazy = false;
    std::uint64_t step_budget = 1'000'000'000ULL;
};

/// One step of the weighted walk. When lazy, stay put with probability 1/2.
inline std::uint32_t step(const WeightedGraph& g, std::uint32_t current, bool lazy, Rng& rng) {
    if (lazy && rng.coin()) return current;
    return g.halfedge_target(g.sample_halfedge(current, rng));
}

/// Run trials 0..trials-1, each with its own rng stream derived from
/// (seed, stream_base + trial), spread over `threads` workers. Results must
/// be written by trial index so aggregation is order-independent.
template <class F>
inline void for_each_trial(std::size_t trials, unsigned threads, std::uint64_t seed,
                           std::uint64_t stream_base, F&& body) {
    if (threads <= 1) {
        for (std::size_t t = 0; t < trials; ++t) {
            Rng rng(seed, stream_base + t);
            body(t, rng);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t t = next.fetch_add(1);
                if (t >= trials) return;
                Rng rng(seed, stream_base + t);
                body(t, rng);
            }
        });
    }
    for (auto& th : pool) th.join();
}

struct CoverOutcome {
    std::uint64_t vertex_steps = 0;
    std::uint64_t edge_steps = 0;
    bool truncated = false;
};

namespace detail {

/// Scratch reused across trials within one worker; epoch stamps avoid
/// clearing the visit arrays every trial.
struct CoverScratch {
    std::vector<std::uint32_t> vertex_stamp;
    std::vector<std::uint32_t> edge_stamp;
    std::uint32_t epoch = 0;
};

inline CoverOutcome cover_walk(const WeightedGraph& g, std::uint32_t start, const WalkConfig& cfg,
                               Rng& rng, CoverScratch& scratch) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (scratch.vertex_stamp.size() != n || scratch.edge_stamp.size() != m) {
        scratch.vertex_stamp.assign(n, 0);
        scratch.edge_stamp.assign(m, 0);
        scratch.epoch = 0;
    }
    if (++scratch.epoch == 0) { // stamp wrap: reset once every 2^32 trials
        scratch.vertex_stamp.assign(n, 0);
        scratch.edge_stamp.assign(m, 0);
        scratch.epoch = 1;
    }
    const std::uint32_t epoch = scratch.epoch;

    std::size_t vertices_left = n;
    std::size_t edges_left = m;
    std::uint32_t cur = start;
    scratch.vertex_stamp[cur] = epoch;
    --vertices_left;

    CoverOutcome out;
    std::uint64_t t = 0;
    const bool lazy = cfg.lazy;
    while (vertices_left > 0 || edges_left > 0) {
        if (t >= cfg.step_budget) {
            out.truncated = true;
            if (vertices_left > 0) out.vertex_steps = t;
            if (edges_left > 0) out.edge_steps = t;
            return out;
        }
        ++t;
        if (lazy && rng.coin()) continue;
        const std::size_t h = g.sample_halfedge(cur, rng);
        cur = g.halfedge_target(h);
        const std::uint32_t e = g.halfedge_edge(h);
        if (scratch.edge_stamp[e] != epoch) {
            scratch.edge_stamp[e] = epoch;
            if (--edges_left == 0) out.edge_steps = t;
        }
        if (scratch.vertex_stamp[cur] != epoch) {
            scratch.vertex_stamp[cur] = epoch;
            if (--vertices_left == 0) out.vertex_steps = t;
        }
    }
    return out;
}

} // namespace detail

/// Single-trajectory cover walk reporting both the vertex and the edge cover
/// step on the same path (so edge_steps >= vertex_steps always).
inline CoverOutcome cover_walk(const WeightedGraph& g, std::uint32_t start, const WalkConfig& cfg,
                               Rng& rng) {
    if (!g.connected()) throw invalid_input("cover walk on a disconnected graph");
    detail::CoverScratch scratch;
    return detail::cover_walk(g, start, cfg, rng, scratch);
}

inline std::uint64_t vertex_cover_time(const WeightedGraph& g, std::uint32_t start, bool lazy,
                                       Rng& rng) {
    WalkConfig cfg;
    cfg.lazy = lazy;
    const auto out = cover_walk(g, start, cfg, rng);
    if (out.truncated) throw truncation_error("vertex cover walk hit its step budget");
    return out.vertex_steps;
}

inline std::uint64_t edge_cover_time(const WeightedGraph& g, std::uint32_t start, bool lazy,
                                     Rng& rng) {
    WalkConfig cfg;
    cfg.lazy = lazy;
    const auto out = cover_walk(g, start, cfg, rng);
    if (out.truncated) throw truncation_error("edge cover walk hit its step budget");
    return out.edge_steps;
}

enum class CoverMode { vertex, edge };

struct CoverStats {
    std::size_t trials = 0;
    double mean = 0.0;
    std::optional<double> se; // absent when trials < 2
    double min = 0.0;
    double max = 0.0;
    std::size_t truncated = 0;
    std::vector<double> values; // retained when requested
};

/// Monte Carlo cover-time estimate from one start vertex. Deterministic for
/// fixed (seed, stream_base) regardless of thread count.
inline CoverStats cover_time_stats(const WeightedGraph& g, std::uint32_t start, CoverMode mode,
                                   std::size_t trials, const WalkConfig& cfg, std::uint64_t seed,
                                   unsigned threads = 1, bool retain = false,
                                   std::uint64_t stream_base = 0) {
    if (!g.connected()) throw invalid_input("cover walk on a disconnected graph");
    std::vector<double> vals(trials);
    std::vector<std::uint8_t> trunc(trials, 0);
    for_each_trial(trials, threads, seed, stream_base, [&](std::size_t t, Rng& rng) {
        thread_local detail::CoverScratch scratch;
        const auto out = detail::cover_walk(g, start, cfg, rng, scratch);
        vals[t] = static_cast<double>(mode == CoverMode::vertex ? out.vertex_steps : out.edge_steps);
        trunc[t] = out.truncated ? 1 : 0;
    });
    const Summary s = summarize(vals);
    CoverStats cs;
    cs.trials = trials;
    cs.mean = s.mean;
    cs.se = s.se;
    cs.min = s.min;
    cs.max = s.max;
    for (auto f : trunc) cs.truncated += f;
    if (retain) cs.values = std::move(vals);
    return cs;
}

struct CoverTable {
    std::vector<CoverStats> per_start;
    std::uint32_t argmax_start = 0;
    double max_mean = 0.0; // the cover-time estimate: max over starts
};

/// Per-start cover statistics and the max of the per-start means.
inline CoverTable estimate_cover_time(const WeightedGraph& g, std::size_t trials,
                                      const WalkConfig& cfg, std::uint64_t seed,
                                      unsigned threads = 1, CoverMode mode = CoverMode::vertex) {
    CoverTable table;
    table.per_start.reserve(g.vertex_count());
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        const std::uint64_t base = static_cast<std::uint64_t>(s) * trials;
        table.per_start.push_back(
            cover_time_stats(g, s, mode, trials, cfg, seed, threads, false, base));
        if (table.per_start.back().mean > table.max_mean) {
            table.max_mean = table.per_start.back().mean;
            table.argmax_start = s;
        }
    }
    return table;
}

/// Monte Carlo estimates of Pr(A_t(v)): the walk avoids v during [T, t].
/// Starts from stationarity unless an explicit start is given.
inline std::vector<double> empirical_unvisit_prob(const WeightedGraph& g, std::uint32_t v,
                                                  std::uint64_t T, std::vector<std::uint64_t> ts,
                                                  std::size_t trials, std::uint64_t seed,
                                                  unsigned threads = 1,
                                                  std::optional<std::uint32_t> start = std::nullopt,
                                                  bool lazy = false) {
    for (auto t : ts)
        if (t < T) throw invalid_input("empirical_unvisit_prob: t < T in query list");
    if (g.vertex_count() == 1) return std::vector<double>(ts.size(), 0.0);
    std::uint64_t tmax = T;
    for (auto t : ts) tmax = std::max(tmax, t);
    std::vector<std::atomic<std::uint64_t>> hits(ts.size());
    for (auto& h : hits) h.store(0);
    for_each_trial(trials, threads, seed, 0, [&](std::size_t, Rng& rng) {
        std::uint32_t cur = start ? *start : g.sample_stationary(rng);
        bool hit = (T == 0 && cur == v);
        std::uint64_t first_hit = hit ? 0 : tmax + 1; // first time in [T, tmax] at v
        for (std::uint64_t s = 1; s <= tmax && !hit; ++s) {
            cur = step(g, cur, lazy, rng);
            if (s >= T && cur == v) {
                first_hit = s;
                hit = true;
            }
        }
        for (std::size_t i = 0; i < ts.size(); ++i)
            if (first_hit > ts[i]) hits[i].fetch_add(1, std::memory_order_relaxed);
    });
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = static_cast<double>(hits[i].load()) / static_cast<double>(trials);
    return out;
}

/// Mean number of visits to v during steps 0..T-1 of a walk started at v
/// (the start counts, so the result is >= 1).
inline double empirical_returns(const WeightedGraph& g, std::uint32_t v, std::uint64_t T,
                                std::size_t trials, std::uint64_t seed, unsigned threads = 1,
                                bool lazy = false) {
    if (T < 1) throw invalid_input("empirical_returns: T >= 1 required");
    std::vector<double> counts(trials);
    for_each_trial(trials, threads, seed, 0, [&](std::size_t t, Rng& rng) {
        std::uint32_t cur = v;
        std::uint64_t visits = 1;
        for (std::uint64_t s = 1; s < T; ++s) {
            cur = step(g, cur, lazy, rng);
            if (cur == v) ++visits;
        }
        counts[t] = static_cast<double>(visits);
    });
    return summarize(counts).mean;
}

struct VisitTailResult {
    std::vector<std::uint64_t> visit_counts; // Z_t per trial (times 1..t)
    double pi_A = 0.0;

    double tail_at(double gamma, double t_pi_A) const {
        std::size_t c = 0;
        for (auto z : visit_counts)
            if (static_cast<double>(z) - t_pi_A >= gamma) ++c;
        return static_cast<double>(c) / static_cast<double>(visit_counts.size());
    }
};

/// Distribution of Z_t, the number of visits to the set A during steps 1..t,
/// for a walk started at `start`.
inline VisitTailResult empirical_visit_tail(const WeightedGraph& g,
                                            const std::vector<std::uint32_t>& A, std::uint64_t t,
                                            std::size_t trials, std::uint32_t start, bool lazy,
                                            std::uint64_t seed, unsigned threads = 1) {
    std::vector<char> inA(g.vertex_count(), 0);
    VisitTailResult res;
    for (auto a : A) {
        inA[a] = 1;
        res.pi_A += g.stationary(a);
    }
    res.visit_counts.resize(trials);
    for_each_trial(trials, threads, seed, 0, [&](std::size_t tr, Rng& rng) {
        std::uint32_t cur = start;
        std::uint64_t z = 0;
        for (std::uint64_t s = 1; s <= t; ++s) {
            cur = step(g, cur, lazy, rng);
            z += inA[cur];
        }
        res.visit_counts[tr] = z;
    });
    return res;
}

} // namespace coverlab
