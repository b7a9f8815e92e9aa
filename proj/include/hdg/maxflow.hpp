#pragma once

#include <vector>

namespace hdg {

/// Bipartite assignment network: unit source->left edges, unit left->right
/// edges, integer right->sink capacities.
struct FlowNetwork {
    int num_left = 0;
    std::vector<int> right_capacity;
    std::vector<std::vector<int>> edges;  // edges[l] lists right nodes reachable from l

    int num_right() const { return static_cast<int>(right_capacity.size()); }
    /// Throws InvalidInput on negative capacities, bad indices or duplicate edges.
    void validate() const;
};

struct FlowResult {
    int value = 0;
    std::vector<int> assignment;  // right node per left node, -1 if unassigned
};

/// Edmonds-Karp with breadth-first search visiting nodes in index order.
FlowResult max_flow(const FlowNetwork& net);

}  // namespace hdg
