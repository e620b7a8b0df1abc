#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aqn/core.hpp"

namespace aqn {

// Materialized augmented cube: per-vertex sorted neighbor lists in one flat
// array (the graph is regular, so offsets are implicit).  Immutable after
// construction; concurrent readers are safe.
class AugCube {
public:
    // Builds from the direct adjacency rule.  Requires n <= 20.
    static AugCube build(Dimension d);

    // Builds by the recursive doubling construction (two half copies plus
    // crossed edges).  Exists to cross-check build(); produces an identical
    // edge set.
    static AugCube build_recursive(Dimension d);

    Dimension dim() const { return dim_; }
    std::uint32_t num_vertices() const { return static_cast<std::uint32_t>(dim_.vertex_count()); }
    std::uint64_t num_edges() const { return dim_.edge_count(); }
    int degree() const { return dim_.degree(); }

    std::span<const VertexId> neighbors_of(VertexId v) const {
        return {adj_.data() + std::size_t(v) * degree(), static_cast<std::size_t>(degree())};
    }

    bool has_edge(VertexId u, VertexId v) const;

    // All edges, smaller endpoint first, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    explicit AugCube(Dimension d) : dim_(d) {}

    Dimension dim_;
    std::vector<VertexId> adj_;
};

}  // namespace aqn
