#include "aqn/cuts.hpp"

#include <algorithm>
#include <set>

#include "aqn/dsu.hpp"

namespace aqn {

Path2Cut kappa2_candidate_cut(Dimension d, VertexId base, int i) {
    const int n = d.n();
    if (n < 5) throw std::invalid_argument("the 2-extra vertex-cut family requires n >= 5");
    if (i < 2 || i > n - 3)
        throw std::invalid_argument("the 2-extra vertex-cut family requires 2 <= i <= n-3");
    PathTriple path{base, comp_neighbor(base, i, d), comp_neighbor(base, i + 2, d)};
    const std::array<VertexId, 3> members{path.y, path.center, path.z};
    return {path, neighborhood_of_set(members, d)};
}

TriangleCut lambda2_candidate_cut(Dimension d, VertexId base) {
    if (d.n() < 4) throw std::invalid_argument("the 2-extra edge-cut family requires n >= 4");
    const std::array<VertexId, 3> tri{base, hyper_neighbor(base, 1, d), comp_neighbor(base, 2, d)};
    return {tri, edge_boundary(tri, d)};
}

std::vector<VertexId> super_vertex_cut(Dimension d, VertexId base, int i) {
    const int n = d.n();
    if (i < 2 || i > n - 1)
        throw std::invalid_argument(
            "the 1-extra vertex-cut candidate needs a complement edge of dimension 2..n-1");
    const std::array<VertexId, 2> pair{base, comp_neighbor(base, i, d)};
    return neighborhood_of_set(pair, d);
}

std::vector<std::pair<VertexId, VertexId>> super_edge_cut(Dimension d, VertexId base,
                                                          EdgeKind kind) {
    const std::array<VertexId, 2> pair{base, edge_endpoint(base, kind, d)};
    return edge_boundary(pair, d);
}

namespace {

CutCertificate census_components(const AugCube& g, DisjointSets& dsu,
                                 const std::vector<bool>& removed) {
    const std::uint32_t nv = g.num_vertices();
    std::vector<std::uint32_t> root_size(nv, 0);
    for (std::uint32_t v = 0; v < nv; ++v)
        if (!removed[v]) ++root_size[dsu.find(v)];
    CutCertificate cert;
    for (std::uint32_t v = 0; v < nv; ++v)
        if (root_size[v] > 0) cert.component_sizes.push_back(root_size[v]);
    std::sort(cert.component_sizes.begin(), cert.component_sizes.end());
    cert.disconnected = cert.component_sizes.size() > 1;
    cert.min_component = cert.component_sizes.empty() ? 0 : cert.component_sizes.front();
    return cert;
}

}  // namespace

CutCertificate validate_cut(const AugCube& g, std::span<const VertexId> members) {
    const std::uint32_t nv = g.num_vertices();
    std::vector<bool> removed(nv, false);
    for (VertexId v : members) {
        if (v >= nv) throw std::invalid_argument("cut member vertex out of range");
        removed[v] = true;
    }
    DisjointSets dsu(nv);
    for (std::uint32_t v = 0; v < nv; ++v) {
        if (removed[v]) continue;
        for (VertexId w : g.neighbors_of(v))
            if (v < w && !removed[w]) dsu.unite(v, w);
    }
    CutCertificate cert = census_components(g, dsu, removed);
    cert.kind = ConnKind::vertex;
    cert.vertex_members.assign(members.begin(), members.end());
    std::sort(cert.vertex_members.begin(), cert.vertex_members.end());
    cert.vertex_members.erase(
        std::unique(cert.vertex_members.begin(), cert.vertex_members.end()),
        cert.vertex_members.end());
    return cert;
}

CutCertificate validate_cut(const AugCube& g,
                            std::span<const std::pair<VertexId, VertexId>> members) {
    const std::uint32_t nv = g.num_vertices();
    std::set<std::pair<VertexId, VertexId>> cut;
    for (auto [u, v] : members) {
        if (u >= nv || v >= nv) throw std::invalid_argument("cut member vertex out of range");
        if (!g.has_edge(u, v))
            throw std::invalid_argument("cut member " + std::to_string(u) + "-" +
                                        std::to_string(v) + " is not an edge of the graph");
        cut.insert({std::min(u, v), std::max(u, v)});
    }
    DisjointSets dsu(nv);
    for (std::uint32_t v = 0; v < nv; ++v)
        for (VertexId w : g.neighbors_of(v))
            if (v < w && !cut.count({v, w})) dsu.unite(v, w);

    const std::vector<bool> removed(nv, false);
    CutCertificate cert = census_components(g, dsu, removed);
    cert.kind = ConnKind::edge;
    cert.edge_members.assign(cut.begin(), cut.end());
    return cert;
}

}  // namespace aqn
