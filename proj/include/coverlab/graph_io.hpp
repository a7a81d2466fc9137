#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "coverlab/errors.hpp"
#include "coverlab/kernel.hpp"
#include "coverlab/multigraph.hpp"
#include "coverlab/weighted_graph.hpp"

namespace coverlab {

/// Graph file format: comment lines start with '#'; the first data line is
/// "vertices <n>"; every following line is "u v [kappa]" with 0-indexed
/// endpoints and optional conductance (default 1).

namespace io_detail {

inline bool data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        return true;
    }
    return false;
}

} // namespace io_detail

inline WeightedGraph read_weighted_graph(std::istream& in) {
    std::string line;
    if (!io_detail::data_line(in, line)) throw invalid_input("graph file: empty");
    std::istringstream head(line);
    std::string tag;
    std::size_t n = 0;
    if (!(head >> tag >> n) || tag != "vertices")
        throw invalid_input("graph file: first line must be 'vertices <n>'");
    std::vector<WeightedEdge> edges;
    while (io_detail::data_line(in, line)) {
        std::istringstream ls(line);
        WeightedEdge e;
        if (!(ls >> e.u >> e.v)) throw invalid_input("graph file: bad edge line: " + line);
        if (!(ls >> e.kappa)) e.kappa = 1.0;
        if (e.u >= n || e.v >= n) throw invalid_input("graph file: endpoint out of range: " + line);
        if (!(e.kappa > 0.0)) throw invalid_input("graph file: kappa must be positive: " + line);
        edges.push_back(e);
    }
    return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph read_weighted_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open graph file: " + path);
    return read_weighted_graph(in);
}

inline void write_weighted_graph(std::ostream& out, const WeightedGraph& g,
                                 const std::vector<std::string>& header_comments = {}) {
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "vertices " << g.vertex_count() << "\n";
    char buf[64];
    for (const auto& e : g.edges()) {
        if (e.kappa == 1.0) {
            out << e.u << " " << e.v << "\n";
        } else {
            std::snprintf(buf, sizeof buf, "%.17g", e.kappa);
            out << e.u << " " << e.v << " " << buf << "\n";
        }
    }
}

inline void write_multigraph(std::ostream& out, const Multigraph& g,
                             const std::vector<std::string>& header_comments = {}) {
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline Multigraph to_multigraph(const WeightedGraph& g) {
    Multigraph m(g.vertex_count());
    for (const auto& e : g.edges()) m.add_edge(e.u, e.v);
    return m;
}

/// Kernel-with-lengths file: same shape, third column is the path length.
inline SubdividedGraph read_subdivided(std::istream& in) {
    std::string line;
    if (!io_detail::data_line(in, line)) throw invalid_input("kernel file: empty");
    std::istringstream head(line);
    std::string tag;
    std::size_t n = 0;
    if (!(head >> tag >> n) || tag != "vertices")
        throw invalid_input("kernel file: first line must be 'vertices <n>'");
    SubdividedGraph sub;
    sub.kernel = Multigraph(n);
    while (io_detail::data_line(in, line)) {
        std::istringstream ls(line);
        std::uint32_t u = 0, v = 0, len = 1;
        if (!(ls >> u >> v)) throw invalid_input("kernel file: bad edge line: " + line);
        if (!(ls >> len)) len = 1;
        if (len < 1) throw invalid_input("kernel file: length must be >= 1: " + line);
        sub.kernel.add_edge(u, v);
        sub.lengths.push_back(len);
    }
    return sub;
}

inline SubdividedGraph read_subdivided(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open kernel file: " + path);
    return read_subdivided(in);
}

inline void write_subdivided(std::ostream& out, const SubdividedGraph& sub,
                             const std::vector<std::string>& header_comments = {}) {
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "vertices " << sub.kernel.vertex_count() << "\n";
    for (Multigraph::edge_id e = 0; e < sub.kernel.edge_count(); ++e) {
        const auto [u, v] = sub.kernel.edge(e);
        out << u << " " << v << " " << sub.lengths[e] << "\n";
    }
}

/// Degree-sequence file: one integer per line, '#' comments allowed.
inline std::vector<int> read_degree_file(std::istream& in) {
    std::vector<int> degrees;
    std::string line;
    while (io_detail::data_line(in, line)) {
        std::istringstream ls(line);
        int d = 0;
        if (!(ls >> d)) throw invalid_input("degree file: bad line: " + line);
        degrees.push_back(d);
    }
    if (degrees.empty()) throw invalid_input("degree file: empty");
    return degrees;
}

inline std::vector<int> read_degree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open degree file: " + path);
    return read_degree_file(in);
}

} // namespace coverlab
