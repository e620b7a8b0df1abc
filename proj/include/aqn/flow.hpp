#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace aqn {

// Directed flow network with integer capacities for Menger-style cut
// computations.  Edges are stored in a flat array; the reverse of edge i
// is edge i^1, so residual updates touch a single xor'd index.
class FlowNetwork {
public:
    explicit FlowNetwork(std::uint32_t num_nodes) : head_(num_nodes) {}

    void add_edge(std::uint32_t from, std::uint32_t to, int capacity) {
        head_[from].push_back(static_cast<std::uint32_t>(arcs_.size()));
        arcs_.push_back({to, capacity});
        head_[to].push_back(static_cast<std::uint32_t>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::uint32_t num_nodes() const { return static_cast<std::uint32_t>(head_.size()); }

    // BFS augmenting-path max flow from s to t.  Stops early once the flow
    // reaches `stop_at` (the caller's incumbent makes larger values moot).
    int max_flow(std::uint32_t s, std::uint32_t t,
                 int stop_at = std::numeric_limits<int>::max());

    // Nodes reachable from s in the residual graph of the last max_flow run.
    std::vector<bool> residual_reachable(std::uint32_t s) const;

    // Restores all capacities so the network can be reused for another sink.
    void reset_flow();

private:
    struct Arc {
        std::uint32_t to;
        int residual;  // remaining capacity
    };

    std::vector<Arc> arcs_;
    std::vector<int> initial_residual_;  // lazily captured on first max_flow
    std::vector<std::vector<std::uint32_t>> head_;
};

}  // namespace aqn
