#include "aqn/graph.hpp"

#include <algorithm>

namespace aqn {

namespace {

void check_materializable(Dimension d) {
    if (d.n() > Dimension::kMaxMaterialized)
        throw CapacityError("materialized graphs require n <= " +
                            std::to_string(Dimension::kMaxMaterialized) + ", got " +
                            std::to_string(d.n()));
}

}  // namespace

AugCube AugCube::build(Dimension d) {
    check_materializable(d);
    AugCube g(d);
    const auto nv = d.vertex_count();
    g.adj_.reserve(nv * d.degree());
    for (std::uint64_t v = 0; v < nv; ++v) {
        auto nbrs = neighbors(static_cast<VertexId>(v), d);
        g.adj_.insert(g.adj_.end(), nbrs.begin(), nbrs.end());
    }
    return g;
}

AugCube AugCube::build_recursive(Dimension d) {
    check_materializable(d);
    // Grow adjacency sets dimension by dimension: each step doubles the
    // vertex set, keeps both copies' edges, and joins X to X_n and X-bar_n.
    std::vector<std::vector<VertexId>> adj{{1}, {0}};  // AQ_1 = K_2
    for (int m = 2; m <= d.n(); ++m) {
        const std::uint32_t half_count = 1u << (m - 1);
        const VertexId top = VertexId{1} << (m - 1);
        const VertexId low_mask = top - 1;
        std::vector<std::vector<VertexId>> next(2 * std::size_t(half_count));
        for (std::uint32_t x = 0; x < half_count; ++x) {
            for (VertexId y : adj[x]) {
                next[x].push_back(y);
                next[x | top].push_back(y | top);
            }
            // Crossed edges: equal low bits, or complemented low bits.
            VertexId same = x | top;
            VertexId comp = (x ^ low_mask) | top;
            next[x].push_back(same);
            next[same].push_back(x);
            next[x].push_back(comp);
            next[comp].push_back(x);
        }
        adj = std::move(next);
    }

    AugCube g(d);
    g.adj_.reserve(d.vertex_count() * d.degree());
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        g.adj_.insert(g.adj_.end(), row.begin(), row.end());
    }
    return g;
}

bool AugCube::has_edge(VertexId u, VertexId v) const {
    auto row = neighbors_of(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> AugCube::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(num_edges());
    for (std::uint32_t v = 0; v < num_vertices(); ++v)
        for (VertexId w : neighbors_of(v))
            if (v < w) out.emplace_back(v, w);
    return out;
}

}  // namespace aqn
