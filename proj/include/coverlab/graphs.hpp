#pragma once

#include <cstdint>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/multigraph.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

inline Multigraph make_cycle(std::size_t n) {
    if (n < 2) throw invalid_input("cycle needs n >= 2");
    Multigraph g(n);
    for (std::uint32_t i = 0; i < n; ++i) g.add_edge(i, static_cast<std::uint32_t>((i + 1) % n));
    return g;
}

inline Multigraph make_complete(std::size_t n) {
    Multigraph g(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Multigraph make_path(std::size_t n) {
    if (n < 2) throw invalid_input("path needs n >= 2");
    Multigraph g(n);
    for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Multigraph make_star(std::size_t leaves) {
    Multigraph g(leaves + 1);
    for (std::uint32_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Multigraph make_petersen() {
    Multigraph g(10);
    for (std::uint32_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

} // namespace coverlab
