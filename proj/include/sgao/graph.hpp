#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sgao {

// Simple undirected graph.  Edges are stored normalized (u < v) and sorted,
// with no duplicates; vertex ids are 0..num_vertices-1.  `corners` lists the
// distinguished outer vertices in a fixed order (see gasket.hpp).
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> corners;

    int num_edges() const { return static_cast<int>(edges.size()); }

    // Sorts and dedups `edges`, normalizing each pair to u < v.
    // Throws std::invalid_argument on loops or out-of-range endpoints.
    void normalize();

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;
};

}  // namespace sgao
