#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/rng.hpp"
#include "coverlab/stats.hpp"

namespace coverlab {

/// A rooted tree whose edges carry integer lengths >= 1 (the resistance of
/// the subdivided edge). Leaves form the frontier; their subtree resistance
/// is 0 by convention.
struct SubdividedTree {
    struct Child {
        std::uint32_t node;
        std::uint32_t length;
    };
    std::vector<std::vector<Child>> children; // index 0 is the root

    std::uint32_t add_node() {
        children.emplace_back();
        return static_cast<std::uint32_t>(children.size() - 1);
    }
    void add_child(std::uint32_t parent, std::uint32_t child, std::uint32_t length) {
        if (length < 1) throw invalid_input("tree edge length must be >= 1");
        children[parent].push_back({child, length});
    }
};

/// Root-to-frontier effective resistance by the bottom-up recursion
/// 1/R(T) = sum_i 1/(l_i + R(T_i)), leaves contributing R = 0.
inline double tree_resistance(const SubdividedTree& tree) {
    if (tree.children.empty()) throw invalid_input("tree_resistance: empty tree");
    // iterative post-order; recursion depth is unbounded for path-like trees
    std::vector<double> res(tree.children.size(), 0.0);
    std::vector<std::pair<std::uint32_t, bool>> stack{{0, false}};
    while (!stack.empty()) {
        auto [node, processed] = stack.back();
        stack.pop_back();
        if (tree.children[node].empty()) {
            res[node] = 0.0;
            continue;
        }
        if (!processed) {
            stack.push_back({node, true});
            for (const auto& c : tree.children[node]) stack.push_back({c.node, false});
        } else {
            double inv = 0.0;
            for (const auto& c : tree.children[node])
                inv += 1.0 / (static_cast<double>(c.length) + res[c.node]);
            res[node] = 1.0 / inv;
        }
    }
    return res[0];
}

/// Resistance of the infinite d-regular tree: rho_d = (d-1) / (d (d-2)).
inline double rho_d(int d) {
    if (d < 3) throw invalid_input("rho_d: d >= 3 required");
    return static_cast<double>(d - 1) / (static_cast<double>(d) * static_cast<double>(d - 2));
}

/// Resistance of the infinite branching-(d-1) tree: the fixed point of
/// 1/rho = (d-1)/(1+rho), i.e. rho = 1/(d-2).
inline double branching_resistance(int d) {
    if (d < 3) throw invalid_input("branching_resistance: d >= 3 required");
    return 1.0 / static_cast<double>(d - 2);
}

/// Fixed-point iteration rho <- (1+rho)/(d-1) from rho_0 = 0; converges to
/// 1/(d-2) geometrically. Used as a cross-check of branching_resistance.
inline double branching_resistance_fixed_point(int d, double tol = 1e-12, int max_iter = 200) {
    if (d < 3) throw invalid_input("branching_resistance_fixed_point: d >= 3 required");
    double rho = 0.0;
    for (int i = 0; i < max_iter; ++i) {
        const double next = (1.0 + rho) / static_cast<double>(d - 1);
        if (std::abs(next - rho) < tol) return next;
        rho = next;
    }
    return rho;
}

/// Root-to-frontier resistance of the depth-`depth` unit-length d-regular
/// tree (root degree d, inner degree d), by the scalar recursion that
/// symmetry permits. Converges to rho_d as depth grows.
inline double regular_tree_resistance(int d, int depth) {
    if (d < 3) throw invalid_input("regular_tree_resistance: d >= 3 required");
    if (depth < 1) throw invalid_input("regular_tree_resistance: depth >= 1 required");
    double r = 0.0; // branching-(d-1) subtree of depth k, k = 1..depth-1
    for (int k = 1; k < depth; ++k) r = (1.0 + r) / static_cast<double>(d - 1);
    return (1.0 + r) / static_cast<double>(d);
}

/// Upper bound on the local resistance at the midpoint of a path of k
/// degree-2 vertices between d-regular trees:
/// 1 / ( 1/(floor((k+1)/2) + 1/(d-2)) + 1/(ceil((k+1)/2) + 1/(d-2)) ).
inline double midpoint_resistance_bound(std::uint64_t k, int d) {
    if (d < 3) throw invalid_input("midpoint_resistance_bound: d >= 3 required");
    const double rho = 1.0 / static_cast<double>(d - 2);
    const double lo = std::floor((static_cast<double>(k) + 1.0) / 2.0);
    const double hi = std::ceil((static_cast<double>(k) + 1.0) / 2.0);
    return 1.0 / (1.0 / (lo + rho) + 1.0 / (hi + rho));
}

/// One sample of R_k: the resistance of a depth-k binary tree whose edge
/// lengths are independent geometric(xi) (the unconditioned measure).
inline double sample_binary_tree_resistance(int k, double xi, Rng& rng) {
    if (k == 0) return 0.0;
    const double a = static_cast<double>(rng.geometric(xi)) + sample_binary_tree_resistance(k - 1, xi, rng);
    const double b = static_cast<double>(rng.geometric(xi)) + sample_binary_tree_resistance(k - 1, xi, rng);
    return 1.0 / (1.0 / a + 1.0 / b);
}

struct TailRow {
    int k = 0;
    double xi = 0.0;
    double rho = 0.0;
    double empirical = 0.0;          // Pr(R_k >= rho) estimate
    std::uint64_t exceedances = 0;
    double bound_eq1eq10 = 0.0;      // 2 (1-xi)^{3 rho - 2}, the k = 1 bound
    double bound_eq40 = 0.0;         // (2.5)^k (1-xi)^{2 rho - k}
    double bound_r1g0 = 0.0;         // 3^k (1-xi)^{rho - 2}, constant unspecified
    double cp_upper = 1.0;           // Clopper-Pearson upper limit on the tail
    bool asserted = false;           // the statistical rule permitted an assertion
    bool holds = true;               // empirical <= bound where asserted
};

struct TailExperiment {
    std::vector<TailRow> rows;
    std::uint64_t trials = 0;
    bool all_asserted_hold = true;
};

/// Monte Carlo tail of R_k against the analytic bounds, on a grid of rho
/// values. Assertion rule: a bound is asserted only where it is <= 1 and
/// either the tail has >= 100 exceedances (so the point estimate is solid)
/// or the Clopper-Pearson upper limit already sits below the bound.
inline TailExperiment subdivided_tail_experiment(int k, double xi,
                                                 const std::vector<double>& rho_grid,
                                                 std::uint64_t trials, std::uint64_t seed) {
    if (k < 1 || k > 12) throw invalid_input("subdivided_tail_experiment: k in [1, 12]");
    if (xi <= 0.0 || xi >= 1.0) throw invalid_input("subdivided_tail_experiment: xi in (0, 1)");
    TailExperiment exp;
    exp.trials = trials;
    std::vector<std::uint64_t> counts(rho_grid.size(), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng(seed, t);
        const double r = sample_binary_tree_resistance(k, xi, rng);
        for (std::size_t i = 0; i < rho_grid.size(); ++i)
            if (r >= rho_grid[i]) ++counts[i];
    }
    for (std::size_t i = 0; i < rho_grid.size(); ++i) {
        TailRow row;
        row.k = k;
        row.xi = xi;
        row.rho = rho_grid[i];
        row.exceedances = counts[i];
        row.empirical = static_cast<double>(counts[i]) / static_cast<double>(trials);
        row.bound_eq1eq10 = 2.0 * std::pow(1.0 - xi, 3.0 * row.rho - 2.0);
        row.bound_eq40 = std::pow(2.5, k) * std::pow(1.0 - xi, 2.0 * row.rho - static_cast<double>(k));
        row.bound_r1g0 = std::pow(3.0, k) * std::pow(1.0 - xi, row.rho - 2.0);
        row.cp_upper = clopper_pearson_upper(counts[i], trials);
        const double bound = k == 1 ? std::min(row.bound_eq1eq10, row.bound_eq40) : row.bound_eq40;
        if (bound <= 1.0 && (counts[i] >= 100 || row.cp_upper < bound)) {
            row.asserted = true;
            row.holds = row.empirical <= bound;
            if (!row.holds) exp.all_asserted_hold = false;
        }
        exp.rows.push_back(row);
    }
    return exp;
}

} // namespace coverlab
