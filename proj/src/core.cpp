#include "aqn/core.hpp"

#include <algorithm>
#include <bit>

namespace aqn {

namespace {

void check_vertex(VertexId x, Dimension d) {
    if (!d.contains(x))
        throw std::invalid_argument("vertex label " + std::to_string(x) +
                                    " out of range for n=" + std::to_string(d.n()));
}

void check_dim_index(int i, Dimension d) {
    if (i < 1 || i > d.n())
        throw std::invalid_argument("dimension index " + std::to_string(i) +
                                    " out of range for n=" + std::to_string(d.n()));
}

}  // namespace

VertexId hyper_neighbor(VertexId x, int i, Dimension d) {
    check_vertex(x, d);
    check_dim_index(i, d);
    return x ^ (VertexId{1} << (i - 1));
}

VertexId comp_neighbor(VertexId x, int i, Dimension d) {
    check_vertex(x, d);
    check_dim_index(i, d);
    return x ^ static_cast<VertexId>((std::uint64_t{1} << i) - 1);
}

VertexId edge_endpoint(VertexId x, EdgeKind kind, Dimension d) {
    if (kind.type == EdgeType::hypercube) return hyper_neighbor(x, kind.dim, d);
    if (kind.dim < 2)
        throw std::invalid_argument("complement edges require dimension >= 2");
    return comp_neighbor(x, kind.dim, d);
}

std::vector<VertexId> neighbors(VertexId x, Dimension d) {
    check_vertex(x, d);
    std::vector<VertexId> out;
    out.reserve(d.degree());
    for (int i = 1; i <= d.n(); ++i) out.push_back(x ^ (VertexId{1} << (i - 1)));
    for (int i = 2; i <= d.n(); ++i)
        out.push_back(x ^ static_cast<VertexId>((std::uint64_t{1} << i) - 1));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<EdgeKind> classify_edge(VertexId x, VertexId y, Dimension d) {
    check_vertex(x, d);
    check_vertex(y, d);
    VertexId diff = x ^ y;
    if (diff == 0) return std::nullopt;
    if ((diff & (diff + 1)) == 0) {
        // Low mask 2^i - 1: bit 1 alone is hypercube(1), wider is complement(i).
        int i = std::popcount(diff);
        return i == 1 ? EdgeKind::hypercube(1) : EdgeKind::complement(i);
    }
    if (std::popcount(diff) == 1) return EdgeKind::hypercube(std::countr_zero(diff) + 1);
    return std::nullopt;
}

Half half(VertexId x, Dimension d) {
    check_vertex(x, d);
    return (x >> (d.n() - 1)) & 1 ? Half::R : Half::L;
}

std::pair<VertexId, VertexId> crossed_neighbors(VertexId x, Dimension d) {
    if (d.n() < 2) throw std::invalid_argument("crossed neighbors require n >= 2");
    check_vertex(x, d);
    return {hyper_neighbor(x, d.n(), d), comp_neighbor(x, d.n(), d)};
}

}  // namespace aqn
