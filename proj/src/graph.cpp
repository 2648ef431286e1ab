#include "sgao/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgao {

void Graph::normalize() {
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(num_vertices, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(num_vertices);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

}  // namespace sgao
