#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/multigraph.hpp"
#include "coverlab/rng.hpp"

namespace coverlab {

/// A perfect matching on the configuration points W = [2m]. Point p belongs
/// to the cell of vertex cell_of[p]; cells are laid out consecutively in
/// vertex order, cell i getting degrees[i] points.
struct Pairing {
    std::vector<std::uint32_t> mate;    // mate[p] = partner of point p
    std::vector<std::uint32_t> cell_of; // cell_of[p] = vertex owning p
    std::size_t vertex_count = 0;

    std::size_t point_count() const { return mate.size(); }

    /// Canonical list of pairs (a < b), sorted; identifies the matching.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> canonical_pairs() const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        out.reserve(mate.size() / 2);
        for (std::uint32_t p = 0; p < mate.size(); ++p)
            if (p < mate[p]) out.emplace_back(p, mate[p]);
        return out;
    }
};

/// Uniform perfect matching of the configuration points: shuffle the points
/// and pair them off consecutively (every matching arises from m! 2^m orders).
inline Pairing sample_pairing(const std::vector<int>& degrees, Rng& rng) {
    std::uint64_t total = 0;
    for (int d : degrees) {
        if (d < 0) throw invalid_input("negative degree");
        total += static_cast<std::uint64_t>(d);
    }
    if (total % 2 != 0) throw invalid_input("odd number of configuration points");

    Pairing p;
    p.vertex_count = degrees.size();
    p.mate.resize(total);
    p.cell_of.resize(total);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < degrees.size(); ++v)
        for (int k = 0; k < degrees[v]; ++k) p.cell_of[next++] = v;

    std::vector<std::uint32_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order.data(), order.size());
    for (std::size_t i = 0; i < total; i += 2) {
        p.mate[order[i]] = order[i + 1];
        p.mate[order[i + 1]] = order[i];
    }
    return p;
}

/// The multigraph induced by a pairing: one edge per matched pair, so
/// deg(v) = |cell of v| with loops counted twice.
inline Multigraph pairing_to_multigraph(const Pairing& p) {
    Multigraph g(p.vertex_count);
    for (std::uint32_t pt = 0; pt < p.point_count(); ++pt)
        if (pt < p.mate[pt]) g.add_edge(p.cell_of[pt], p.cell_of[p.mate[pt]]);
    return g;
}

} // namespace coverlab
