#include "hdg/maxflow.hpp"

#include <algorithm>
#include <queue>

#include "hdg/core.hpp"

namespace hdg {

void FlowNetwork::validate() const {
    if (num_left < 0 || static_cast<int>(edges.size()) != num_left) throw InvalidInput("edge lists do not match left side");
    for (int c : right_capacity) {
        if (c < 0) throw InvalidInput("negative slot capacity");
    }
    for (const auto& adj : edges) {
        auto sorted = adj;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidInput("duplicate edge");
        for (int r : adj) {
            if (r < 0 || r >= num_right()) throw InvalidInput("edge to unknown slot");
        }
    }
}

FlowResult max_flow(const FlowNetwork& net) {
    net.validate();
    // Nodes: 0 = source, 1..L = left, L+1..L+R = right, L+R+1 = sink.
    const int L = net.num_left;
    const int R = net.num_right();
    const int N = L + R + 2;
    const int src = 0;
    const int sink = N - 1;
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> g(static_cast<std::size_t>(N));
    auto add = [&](int u, int v, int cap) {
        g[static_cast<std::size_t>(u)].push_back({v, cap, static_cast<int>(g[static_cast<std::size_t>(v)].size())});
        g[static_cast<std::size_t>(v)].push_back({u, 0, static_cast<int>(g[static_cast<std::size_t>(u)].size()) - 1});
    };
    for (int l = 0; l < L; ++l) add(src, 1 + l, 1);
    for (int l = 0; l < L; ++l) {
        auto adj = net.edges[static_cast<std::size_t>(l)];
        std::sort(adj.begin(), adj.end());
        for (int r : adj) add(1 + l, 1 + L + r, 1);
    }
    for (int r = 0; r < R; ++r) add(1 + L + r, sink, net.right_capacity[static_cast<std::size_t>(r)]);
    // Insertion order already lists every adjacency by ascending node index.

    int value = 0;
    while (true) {
        std::vector<int> prev_node(static_cast<std::size_t>(N), -1), prev_arc(static_cast<std::size_t>(N), -1);
        std::queue<int> q;
        q.push(src);
        prev_node[src] = src;
        while (!q.empty() && prev_node[static_cast<std::size_t>(sink)] < 0) {
            const int u = q.front();
            q.pop();
            for (std::size_t i = 0; i < g[static_cast<std::size_t>(u)].size(); ++i) {
                const Arc& a = g[static_cast<std::size_t>(u)][i];
                if (a.cap > 0 && prev_node[static_cast<std::size_t>(a.to)] < 0) {
                    prev_node[static_cast<std::size_t>(a.to)] = u;
                    prev_arc[static_cast<std::size_t>(a.to)] = static_cast<int>(i);
                    q.push(a.to);
                }
            }
        }
        if (prev_node[static_cast<std::size_t>(sink)] < 0) break;
        // Every augmenting path carries one unit (source arcs have capacity 1).
        for (int v = sink; v != src; v = prev_node[static_cast<std::size_t>(v)]) {
            Arc& a = g[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])][static_cast<std::size_t>(prev_arc[static_cast<std::size_t>(v)])];
            a.cap -= 1;
            g[static_cast<std::size_t>(v)][static_cast<std::size_t>(a.rev)].cap += 1;
        }
        ++value;
    }

    FlowResult res{value, std::vector<int>(static_cast<std::size_t>(L), -1)};
    for (int l = 0; l < L; ++l) {
        for (const Arc& a : g[static_cast<std::size_t>(1 + l)]) {
            if (a.to > L && a.to < sink && a.cap == 0) {
                res.assignment[static_cast<std::size_t>(l)] = a.to - 1 - L;
            }
        }
    }
    return res;
}

}  // namespace hdg
