#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aqn/analytics.hpp"
#include "aqn/connectivity.hpp"
#include "aqn/graph.hpp"

namespace aqn {

// A concrete cut plus the post-removal component census that proves (or
// refutes) the h-extra property.
struct CutCertificate {
    ConnKind kind = ConnKind::vertex;
    std::vector<VertexId> vertex_members;
    std::vector<std::pair<VertexId, VertexId>> edge_members;
    std::vector<std::uint32_t> component_sizes;  // ascending
    bool disconnected = false;
    std::uint32_t min_component = 0;

    std::size_t size() const {
        return kind == ConnKind::vertex ? vertex_members.size() : edge_members.size();
    }
    bool h_extra_valid(int h) const {
        return disconnected && min_component > static_cast<std::uint32_t>(h);
    }
};

// The optimal 2-extra vertex-cut family: S = N(P) for the 2-path
// P = (X-bar_i, X, X-bar_{i+2}) with 2 <= i <= n-3, n >= 5; |S| = 6n-17.
struct Path2Cut {
    PathTriple path;
    std::vector<VertexId> members;
};
Path2Cut kappa2_candidate_cut(Dimension d, VertexId base, int i);

// The optimal 2-extra edge-cut family: the edge boundary of the triangle
// {X, X_1, X-bar_2}, n >= 4; |F| = 6n-9.
struct TriangleCut {
    std::array<VertexId, 3> triangle;
    std::vector<std::pair<VertexId, VertexId>> members;
};
TriangleCut lambda2_candidate_cut(Dimension d, VertexId base);

// The 1-extra candidates built on a single edge: the open neighborhood of a
// complement edge of dimension 2..n-1 (4n-8 vertices, four of the endpoints'
// neighbors being shared), and the edge boundary of any edge (4n-4 edges).
std::vector<VertexId> super_vertex_cut(Dimension d, VertexId base, int i);
std::vector<std::pair<VertexId, VertexId>> super_edge_cut(Dimension d, VertexId base,
                                                          EdgeKind kind);

// Removes the members from g and fills the certificate via union-find over
// what remains.
CutCertificate validate_cut(const AugCube& g, std::span<const VertexId> members);
CutCertificate validate_cut(const AugCube& g,
                            std::span<const std::pair<VertexId, VertexId>> members);

}  // namespace aqn
