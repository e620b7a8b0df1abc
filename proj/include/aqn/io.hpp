#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqn/graph.hpp"

namespace aqn {

enum class GraphFormat : std::uint8_t { edgelist, dimacs };

GraphFormat parse_graph_format(std::string_view name);

// Deterministic text serialization: vertices ascending, each edge once with
// the smaller endpoint first.
//   edgelist:  "<|V|> <|E|>" header, then "u v" lines (0-based).
//   dimacs:    "p edge <|V|> <|E|>", then "e u v" lines (1-based).
std::string export_graph(const AugCube& g, GraphFormat format);

struct ImportedGraph {
    std::uint32_t num_vertices = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;  // normalized u < v, sorted
};

// Parses a previously exported graph.  Malformed input raises ParseError
// with the offending line number.
ImportedGraph import_graph(std::string_view text, GraphFormat format);

}  // namespace aqn
