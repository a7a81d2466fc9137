#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "coverlab/errors.hpp"

namespace coverlab {

/// A degree sequence with all degrees >= 2 and an even sum, plus the derived
/// kernel quantities used throughout:
///   nu_j  number of degree-j vertices
///   N     kernel vertices      = #{i : d_i >= 3}
///   M     kernel edges         = (1/2) sum_{j>=3} j nu_j
///   m     total edges          = nu_2 + M
///   d     minimum kernel degree
///   xi    M / m
///   D_k   sum_{j>=3} j^k nu_j
class DegreeSequence {
public:
    static DegreeSequence from(std::vector<int> degrees) {
        if (degrees.empty()) throw invalid_input("degree sequence is empty");
        std::sort(degrees.begin(), degrees.end());
        if (degrees.front() < 2)
            throw invalid_input("degree sequence contains a degree < 2");
        std::uint64_t sum = 0;
        for (int d : degrees) sum += static_cast<std::uint64_t>(d);
        if (sum % 2 != 0) throw invalid_input("degree sum is odd");
        return DegreeSequence(std::move(degrees));
    }

    const std::vector<int>& degrees() const { return degrees_; }
    std::size_t size() const { return degrees_.size(); }

    std::size_t nu(int j) const {
        auto it = counts_.find(j);
        return it == counts_.end() ? 0 : it->second;
    }
    std::size_t nu2() const { return nu(2); }

    std::size_t kernel_vertices() const { return kernel_vertices_; } // N
    std::size_t kernel_edges() const { return kernel_edges_; }       // M
    std::size_t total_edges() const { return nu2() + kernel_edges_; } // m

    bool has_kernel() const { return kernel_vertices_ > 0; }

    /// Minimum kernel degree d = min{j >= 3 : nu_j != 0}.
    int min_kernel_degree() const {
        if (!has_kernel()) throw invalid_input("degree sequence has no kernel vertex");
        return min_kernel_degree_;
    }

    int max_degree() const { return degrees_.back(); }

    double xi() const {
        if (total_edges() == 0) throw invalid_input("empty edge set");
        return static_cast<double>(kernel_edges_) / static_cast<double>(total_edges());
    }

    /// D_k = sum_{j>=3} j^k nu_j.
    double kernel_moment(int k) const {
        double s = 0.0;
        for (const auto& [j, cnt] : counts_) {
            if (j < 3) continue;
            s += std::pow(static_cast<double>(j), k) * static_cast<double>(cnt);
        }
        return s;
    }

    /// Degrees >= 3, ascending (the kernel's degree sequence).
    std::vector<int> kernel_degrees() const {
        std::vector<int> out;
        for (int d : degrees_)
            if (d >= 3) out.push_back(d);
        return out;
    }

private:
    explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
        std::uint64_t kernel_degree_sum = 0;
        for (int d : degrees_) {
            ++counts_[d];
            if (d >= 3) {
                ++kernel_vertices_;
                kernel_degree_sum += static_cast<std::uint64_t>(d);
                if (min_kernel_degree_ == 0 || d < min_kernel_degree_)
                    min_kernel_degree_ = d;
            }
        }
        kernel_edges_ = kernel_degree_sum / 2;
    }

    std::vector<int> degrees_;
    std::map<int, std::size_t> counts_;
    std::size_t kernel_vertices_ = 0;
    std::size_t kernel_edges_ = 0;
    int min_kernel_degree_ = 0;
};

/// sigma = sum_i d_i (d_i - 1) / (2m), over the whole sequence.
inline double sigma(const DegreeSequence& seq) {
    double s = 0.0;
    std::uint64_t sum = 0;
    for (int d : seq.degrees()) {
        s += static_cast<double>(d) * (d - 1);
        sum += static_cast<std::uint64_t>(d);
    }
    return s / static_cast<double>(sum);
}

/// Asymptotic probability that the configuration multigraph is simple:
/// exp(-sigma/2 - sigma^2/4).
inline double predicted_simple_probability(const DegreeSequence& seq) {
    const double s = sigma(seq);
    return std::exp(-s / 2.0 - s * s / 4.0);
}

struct ConditionCheck {
    double measured = 0.0;
    std::optional<bool> pass; // absent = reported only, caller judges
};

/// Finite-scale evaluation of the niceness conditions. The kernel-size and
/// degree-cap conditions are asymptotic, so they are reported with measured
/// values rather than judged: kernel_size passes iff the kernel is nonempty,
/// and the degree cap only reports zeta0_hat = ln(max degree)/ln N.
struct NicenessReport {
    ConditionCheck diverging_kernel; // measured: N
    ConditionCheck sub_poly_degrees; // measured: zeta0_hat, no verdict
    ConditionCheck third_moment;     // measured: D_3 / M, pass iff D_3 <= a0 M
    ConditionCheck min_degree_frac;  // measured: nu_d / N, pass iff nu_d >= alpha N
    int kernel_min_degree = 0;
    bool all_pass() const {
        return diverging_kernel.pass.value_or(false) && third_moment.pass.value_or(false) &&
               min_degree_frac.pass.value_or(false);
    }
};

inline NicenessReport validate_nice(const DegreeSequence& seq, double a0, double alpha) {
    NicenessReport rep;
    const auto N = static_cast<double>(seq.kernel_vertices());
    rep.diverging_kernel.measured = N;
    rep.diverging_kernel.pass = seq.has_kernel();
    if (!seq.has_kernel()) return rep;

    rep.kernel_min_degree = seq.min_kernel_degree();
    rep.sub_poly_degrees.measured =
        N > 1.0 ? std::log(static_cast<double>(seq.max_degree())) / std::log(N)
                : std::numeric_limits<double>::infinity();

    const double M = static_cast<double>(seq.kernel_edges());
    const double d3 = seq.kernel_moment(3);
    rep.third_moment.measured = d3 / M;
    rep.third_moment.pass = d3 <= a0 * M;

    const double nud = static_cast<double>(seq.nu(rep.kernel_min_degree));
    rep.min_degree_frac.measured = nud / N;
    rep.min_degree_frac.pass = nud >= alpha * N;
    return rep;
}

} // namespace coverlab
