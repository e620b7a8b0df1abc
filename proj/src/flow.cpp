#include "aqn/flow.hpp"

#include <algorithm>
#include <queue>

namespace aqn {

int FlowNetwork::max_flow(std::uint32_t s, std::uint32_t t, int stop_at) {
    if (initial_residual_.empty()) {
        initial_residual_.reserve(arcs_.size());
        for (const Arc& a : arcs_) initial_residual_.push_back(a.residual);
    }

    int flow = 0;
    std::vector<std::uint32_t> parent_arc(num_nodes());
    std::vector<bool> seen(num_nodes());
    while (flow < stop_at) {
        std::fill(seen.begin(), seen.end(), false);
        seen[s] = true;
        std::queue<std::uint32_t> q;
        q.push(s);
        bool reached = false;
        while (!q.empty() && !reached) {
            const std::uint32_t u = q.front();
            q.pop();
            for (std::uint32_t idx : head_[u]) {
                const Arc& a = arcs_[idx];
                if (a.residual <= 0 || seen[a.to]) continue;
                seen[a.to] = true;
                parent_arc[a.to] = idx;
                if (a.to == t) {
                    reached = true;
                    break;
                }
                q.push(a.to);
            }
        }
        if (!reached) break;

        int bottleneck = std::numeric_limits<int>::max();
        for (std::uint32_t v = t; v != s;) {
            const std::uint32_t idx = parent_arc[v];
            bottleneck = std::min(bottleneck, arcs_[idx].residual);
            v = arcs_[idx ^ 1].to;
        }
        for (std::uint32_t v = t; v != s;) {
            const std::uint32_t idx = parent_arc[v];
            arcs_[idx].residual -= bottleneck;
            arcs_[idx ^ 1].residual += bottleneck;
            v = arcs_[idx ^ 1].to;
        }
        flow += bottleneck;
    }
    return flow;
}

std::vector<bool> FlowNetwork::residual_reachable(std::uint32_t s) const {
    std::vector<bool> seen(num_nodes());
    seen[s] = true;
    std::vector<std::uint32_t> stack{s};
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t idx : head_[u]) {
            const Arc& a = arcs_[idx];
            if (a.residual > 0 && !seen[a.to]) {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
        }
    }
    return seen;
}

void FlowNetwork::reset_flow() {
    if (initial_residual_.empty()) return;
    for (std::size_t i = 0; i < arcs_.size(); ++i) arcs_[i].residual = initial_residual_[i];
}

}  // namespace aqn
