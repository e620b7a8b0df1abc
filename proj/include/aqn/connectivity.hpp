#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqn/graph.hpp"

namespace aqn {

enum class ConnKind : std::uint8_t { vertex, edge };
enum class Method : std::uint8_t { flow, exhaustive, fragment };

ConnKind parse_conn_kind(std::string_view name);
Method parse_method(std::string_view name);
const char* conn_kind_name(ConnKind kind);
const char* method_name(Method method);

struct SearchLimits {
    double timeout_sec = 300.0;
    std::uint64_t max_nodes = 0;  // 0 = unlimited
};

struct ConnectivityResult {
    // Minimum cut size; absent when no cut satisfies the component
    // condition (e.g. h too large for the graph).
    std::optional<std::uint32_t> value;
    std::vector<VertexId> vertex_cut;
    std::vector<std::pair<VertexId, VertexId>> edge_cut;
    ConnKind kind = ConnKind::vertex;
    Method method = Method::flow;
    bool exact = true;            // false: incumbent upper bound (budget ran out)
    bool complete_graph = false;  // |V|-1 convention applied
    std::uint64_t nodes_explored = 0;
    double elapsed_ms = 0;
};

// kappa(G) as the minimum over s in {v0} ∪ N(v0), t nonadjacent to s, of
// the min s-t vertex cut (vertex-split max flow).  Complete graphs return
// |V|-1 with the convention flagged; disconnected input returns 0.
ConnectivityResult vertex_connectivity(const AugCube& g, const SearchLimits& limits = {});

// lambda(G) via unit-capacity max flow from a fixed source to every sink.
ConnectivityResult edge_connectivity(const AugCube& g, const SearchLimits& limits = {});

// Min s-t cut of the requested kind with a realizing cut.  For the vertex
// kind s and t must be nonadjacent.
ConnectivityResult menger_local(const AugCube& g, VertexId s, VertexId t, ConnKind kind);

// Exact h-extra connectivity by full subset enumeration; requires
// |V| <= 16.  Vertex kind enumerates removal sets S directly; edge kind
// enumerates bipartitions (A, V\A) and minimizes the boundary.  Absent
// value means no cut of that kind exists at level h.
ConnectivityResult extra_conn_exhaustive(const AugCube& g, int h, ConnKind kind,
                                         const SearchLimits& limits = {});

// h-extra edge connectivity via branch-and-bound over connected fragments
// A with |A| <= size_cap (default |V|/2).  Exact when the enumeration
// completes within the limits; otherwise the incumbent is returned with
// exact = false.
ConnectivityResult extra_conn_fragment(const AugCube& g, int h, std::uint32_t size_cap = 0,
                                       const SearchLimits& limits = {});

}  // namespace aqn
