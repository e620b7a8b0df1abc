#include "aqn/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "aqn/bitvec.hpp"
#include "aqn/dsu.hpp"
#include "aqn/flow.hpp"

namespace aqn {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    explicit Deadline(double seconds)
        : end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(seconds))) {}
    bool expired() const { return Clock::now() >= end; }
};

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Lexicographic order on sorted member lists; used to break ties among
// minimum cuts deterministically.
template <typename T>
bool lex_less(const std::vector<T>& a, const std::vector<T>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool graph_is_connected(const AugCube& g) {
    const std::uint32_t nv = g.num_vertices();
    std::vector<bool> seen(nv, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::uint32_t count = 1;
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors_of(u))
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == nv;
}

// --- flow instances -------------------------------------------------------

// Vertex-split network: node 2v is v's entry, 2v+1 its exit, joined by a
// unit arc; adjacency arcs have capacity |V| (effectively unbounded).
FlowNetwork make_vertex_split_network(const AugCube& g) {
    const std::uint32_t nv = g.num_vertices();
    FlowNetwork net(2 * nv);
    const int big = static_cast<int>(nv);
    for (std::uint32_t v = 0; v < nv; ++v) {
        net.add_edge(2 * v, 2 * v + 1, 1);
        for (VertexId w : g.neighbors_of(v)) net.add_edge(2 * v + 1, 2 * w, big);
    }
    return net;
}

FlowNetwork make_edge_network(const AugCube& g) {
    FlowNetwork net(g.num_vertices());
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        for (VertexId w : g.neighbors_of(v)) net.add_edge(v, w, 1);
    return net;
}

std::vector<VertexId> extract_vertex_cut(FlowNetwork& net, const AugCube& g, VertexId s) {
    const auto reach = net.residual_reachable(2 * s + 1);
    std::vector<VertexId> cut;
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
}

std::vector<std::pair<VertexId, VertexId>> extract_edge_cut(FlowNetwork& net, const AugCube& g,
                                                            VertexId s) {
    const auto reach = net.residual_reachable(s);
    std::vector<std::pair<VertexId, VertexId>> cut;
    for (auto [u, v] : g.edges())
        if (reach[u] != reach[v]) cut.push_back({u, v});
    return cut;
}

// --- subset-search helpers (|V| <= 16, adjacency as 16-bit masks) ---------

std::vector<std::uint32_t> mask_adjacency(const AugCube& g) {
    std::vector<std::uint32_t> adj(g.num_vertices(), 0);
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
        for (VertexId w : g.neighbors_of(v)) adj[v] |= 1u << w;
    return adj;
}

// Component sizes of the subgraph induced by `alive`, via union-find over
// its edges.
std::vector<std::uint32_t> mask_component_sizes(const std::vector<std::uint32_t>& adj,
                                                std::uint32_t alive) {
    DisjointSets dsu(static_cast<std::uint32_t>(adj.size()));
    for (std::uint32_t m = alive; m;) {
        const std::uint32_t v = std::countr_zero(m);
        m &= m - 1;
        std::uint32_t nb = adj[v] & alive;
        while (nb) {
            dsu.unite(v, std::countr_zero(nb));
            nb &= nb - 1;
        }
    }
    std::vector<std::uint32_t> sizes;
    std::uint32_t seen = 0;
    for (std::uint32_t m = alive; m;) {
        const std::uint32_t v = std::countr_zero(m);
        m &= m - 1;
        const std::uint32_t root = dsu.find(v);
        if (!(seen >> root & 1)) {
            seen |= 1u << root;
            sizes.push_back(dsu.component_size(v));
        }
    }
    return sizes;
}

std::vector<VertexId> mask_to_vertices(std::uint32_t mask) {
    std::vector<VertexId> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

ConnKind parse_conn_kind(std::string_view name) {
    if (name == "vertex") return ConnKind::vertex;
    if (name == "edge") return ConnKind::edge;
    throw std::invalid_argument("unknown connectivity kind: " + std::string(name));
}

Method parse_method(std::string_view name) {
    if (name == "flow") return Method::flow;
    if (name == "exhaustive") return Method::exhaustive;
    if (name == "fragment") return Method::fragment;
    throw std::invalid_argument("unknown method: " + std::string(name));
}

const char* conn_kind_name(ConnKind kind) { return kind == ConnKind::vertex ? "vertex" : "edge"; }

const char* method_name(Method method) {
    switch (method) {
        case Method::flow: return "flow";
        case Method::exhaustive: return "exhaustive";
        case Method::fragment: return "fragment";
    }
    return "?";
}

ConnectivityResult vertex_connectivity(const AugCube& g, const SearchLimits& limits) {
    const auto start = Clock::now();
    ConnectivityResult res;
    res.kind = ConnKind::vertex;
    res.method = Method::flow;

    const std::uint32_t nv = g.num_vertices();
    if (!graph_is_connected(g)) {
        res.value = 0;
        res.elapsed_ms = ms_since(start);
        return res;
    }
    if (g.dim().is_complete()) {
        res.value = nv - 1;
        res.complete_graph = true;
        res.elapsed_ms = ms_since(start);
        return res;
    }

    const Deadline deadline(limits.timeout_sec);
    std::uint32_t best = nv;  // any vertex cut is smaller than |V|
    VertexId best_s = 0, best_t = 0;

    std::vector<VertexId> sources{0};
    for (VertexId w : g.neighbors_of(0)) sources.push_back(w);

    FlowNetwork net = make_vertex_split_network(g);
    for (VertexId s : sources) {
        for (std::uint32_t t = 0; t < nv; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            if (deadline.expired())
                throw CapacityError("vertex connectivity timed out after " +
                                    std::to_string(limits.timeout_sec) + " s");
            net.reset_flow();
            const int flow = net.max_flow(2 * s + 1, 2 * t, static_cast<int>(best));
            ++res.nodes_explored;
            if (static_cast<std::uint32_t>(flow) < best) {
                best = flow;
                best_s = s;
                best_t = t;
            }
        }
    }

    net.reset_flow();
    net.max_flow(2 * best_s + 1, 2 * best_t);
    res.vertex_cut = extract_vertex_cut(net, g, best_s);
    res.value = best;
    res.elapsed_ms = ms_since(start);
    return res;
}

ConnectivityResult edge_connectivity(const AugCube& g, const SearchLimits& limits) {
    const auto start = Clock::now();
    ConnectivityResult res;
    res.kind = ConnKind::edge;
    res.method = Method::flow;

    const std::uint32_t nv = g.num_vertices();
    if (!graph_is_connected(g)) {
        res.value = 0;
        res.elapsed_ms = ms_since(start);
        return res;
    }
    if (nv == 1) {
        res.value = 0;
        res.elapsed_ms = ms_since(start);
        return res;
    }

    const Deadline deadline(limits.timeout_sec);
    std::uint32_t best = g.degree();  // lambda <= delta
    std::uint32_t best_t = 1;

    FlowNetwork net = make_edge_network(g);
    for (std::uint32_t t = 1; t < nv; ++t) {
        if (deadline.expired())
            throw CapacityError("edge connectivity timed out after " +
                                std::to_string(limits.timeout_sec) + " s");
        net.reset_flow();
        const int flow = net.max_flow(0, t, static_cast<int>(best));
        ++res.nodes_explored;
        if (static_cast<std::uint32_t>(flow) < best) {
            best = flow;
            best_t = t;
        }
    }

    net.reset_flow();
    net.max_flow(0, best_t);
    res.edge_cut = extract_edge_cut(net, g, 0);
    res.value = best;
    res.elapsed_ms = ms_since(start);
    return res;
}

ConnectivityResult menger_local(const AugCube& g, VertexId s, VertexId t, ConnKind kind) {
    const auto start = Clock::now();
    if (s == t) throw std::invalid_argument("menger_local requires s != t");
    ConnectivityResult res;
    res.kind = kind;
    res.method = Method::flow;

    if (kind == ConnKind::vertex) {
        if (g.has_edge(s, t))
            throw std::invalid_argument("vertex-kind menger_local requires nonadjacent s, t");
        FlowNetwork net = make_vertex_split_network(g);
        res.value = net.max_flow(2 * s + 1, 2 * t);
        res.vertex_cut = extract_vertex_cut(net, g, s);
    } else {
        FlowNetwork net = make_edge_network(g);
        res.value = net.max_flow(s, t);
        res.edge_cut = extract_edge_cut(net, g, s);
    }
    res.elapsed_ms = ms_since(start);
    return res;
}

ConnectivityResult extra_conn_exhaustive(const AugCube& g, int h, ConnKind kind,
                                         const SearchLimits& limits) {
    const auto start = Clock::now();
    const std::uint32_t nv = g.num_vertices();
    if (nv > 16)
        throw CapacityError("exhaustive search enumerates 2^|V| subsets; requires |V| <= 16");
    if (h < 0) throw std::invalid_argument("h must be nonnegative");

    const Deadline deadline(limits.timeout_sec);
    const auto adj = mask_adjacency(g);
    const std::uint32_t full = nv == 32 ? ~0u : (1u << nv) - 1;
    const std::uint32_t hh = static_cast<std::uint32_t>(h);

    ConnectivityResult res;
    res.kind = kind;
    res.method = Method::exhaustive;

    auto small_ok = [&](std::uint32_t alive) {
        for (std::uint32_t size : mask_component_sizes(adj, alive))
            if (size <= hh) return false;
        return true;
    };

    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::uint32_t best = kUnset;
    std::vector<VertexId> best_vertices;
    std::vector<std::pair<VertexId, VertexId>> best_edges;

    if (kind == ConnKind::vertex) {
        for (std::uint32_t s = 0; s <= full; ++s) {
            if ((s & 0xFFF) == 0 && deadline.expired())
                throw CapacityError("exhaustive search timed out");
            ++res.nodes_explored;
            const auto size = static_cast<std::uint32_t>(std::popcount(s));
            if (size > best) continue;
            const std::uint32_t alive = full & ~s;
            const auto comps = mask_component_sizes(adj, alive);
            if (comps.size() < 2) continue;
            if (!small_ok(alive)) continue;
            auto members = mask_to_vertices(s);
            if (size < best || lex_less(members, best_vertices)) {
                best = size;
                best_vertices = std::move(members);
            }
        }
        if (best != kUnset) {
            res.value = best;
            res.vertex_cut = std::move(best_vertices);
        }
    } else {
        // Bipartitions (A, V\A); vertex 0 pinned to A to halve the scan.
        for (std::uint32_t a = 1; a <= full; a += 2) {
            if ((a & 0xFFF) == 1 && deadline.expired())
                throw CapacityError("exhaustive search timed out");
            const std::uint32_t b = full & ~a;
            if (b == 0) continue;
            ++res.nodes_explored;
            if (!small_ok(a) || !small_ok(b)) continue;
            std::uint32_t boundary = 0;
            for (std::uint32_t m = a; m;) {
                const std::uint32_t v = std::countr_zero(m);
                m &= m - 1;
                boundary += std::popcount(adj[v] & b);
            }
            if (boundary > best) continue;
            std::vector<std::pair<VertexId, VertexId>> cut;
            for (std::uint32_t m = a; m;) {
                const std::uint32_t v = std::countr_zero(m);
                m &= m - 1;
                std::uint32_t nb = adj[v] & b;
                while (nb) {
                    const std::uint32_t w = std::countr_zero(nb);
                    nb &= nb - 1;
                    cut.emplace_back(std::min<VertexId>(v, w), std::max<VertexId>(v, w));
                }
            }
            std::sort(cut.begin(), cut.end());
            if (boundary < best || lex_less(cut, best_edges)) {
                best = boundary;
                best_edges = std::move(cut);
            }
        }
        if (best != kUnset) {
            res.value = best;
            res.edge_cut = std::move(best_edges);
        }
    }

    res.elapsed_ms = ms_since(start);
    return res;
}

// ---------------------------------------------------------------------------
// Fragment search: enumerate connected vertex sets A exactly once (rooted at
// their minimum vertex, grown through an ordered extension frontier) and
// minimize |boundary(A)| subject to |A| > h and every component of the
// complement side exceeding h.
// ---------------------------------------------------------------------------

namespace {

struct FragmentSearch {
    const AugCube& g;
    std::uint32_t nv;
    int h;
    std::uint32_t cap;
    Deadline deadline;
    std::uint64_t max_nodes;

    std::vector<BitVec> adj;
    std::uint64_t nodes = 0;
    bool complete = true;
    std::uint32_t best;
    BitVec best_set;
    int degree;

    FragmentSearch(const AugCube& graph, int level, std::uint32_t size_cap,
                   const SearchLimits& limits)
        : g(graph),
          nv(graph.num_vertices()),
          h(level),
          cap(size_cap),
          deadline(limits.timeout_sec),
          max_nodes(limits.max_nodes),
          best(nv * graph.degree() + 1),
          best_set(nv),
          degree(graph.degree()) {
        adj.reserve(nv);
        for (std::uint32_t v = 0; v < nv; ++v) {
            BitVec m(nv);
            for (VertexId w : g.neighbors_of(v)) m.set(w);
            adj.push_back(std::move(m));
        }
    }

    bool budget_left() {
        if (max_nodes && nodes >= max_nodes) complete = false;
        if ((nodes & 0x3FF) == 0 && deadline.expired()) complete = false;
        return complete;
    }

    // Complement-side component condition: every component of G - A has
    // more than h vertices.
    bool complement_ok(const BitVec& a) {
        BitVec remaining(nv);
        for (std::uint32_t v = 0; v < nv; ++v)
            if (!a.test(v)) remaining.set(v);
        BitVec comp(nv), frontier(nv);
        std::uint32_t left = nv - a.popcount();
        while (left > 0) {
            std::uint32_t seed = nv;
            remaining.for_each_set([&](std::uint32_t v) {
                if (seed == nv) seed = v;
            });
            comp.clear();
            comp.set(seed);
            frontier.clear();
            frontier.set(seed);
            std::uint32_t size = 1;
            while (frontier.any()) {
                BitVec next(nv);
                frontier.for_each_set([&](std::uint32_t v) { next.or_with(adj[v]); });
                next.and_with(remaining);
                next.and_not_with(comp);
                comp.or_with(next);
                size += next.popcount();
                frontier = std::move(next);
            }
            if (size <= static_cast<std::uint32_t>(h)) return false;
            remaining.and_not_with(comp);
            left -= size;
        }
        return true;
    }

    void consider(const BitVec& a, std::uint32_t size, std::uint32_t boundary) {
        if (size <= static_cast<std::uint32_t>(h)) return;
        if (boundary > best) return;
        if (!complement_ok(a)) return;
        if (boundary < best) {
            best = boundary;
            best_set.copy_from(a);
        }
        // Equal-size candidates keep the first find; enumeration order is
        // deterministic, so so is the certificate.
    }

    // ext is the ordered extension frontier: vertices > root, adjacent to A,
    // neither banned nor already members.  Branch k adds ext[k]; once its
    // subtree finishes, ext[k] is banned for the remaining branches at this
    // level (and their subtrees), which is what makes every connected set
    // come up exactly once.  Bans taken here are undone before returning so
    // the caller's later branches see only their own.
    void grow(BitVec& a, std::uint32_t size, std::uint32_t boundary,
              std::vector<std::uint32_t>& ext, std::size_t idx, BitVec& banned,
              std::uint32_t root) {
        if (!budget_left()) return;
        ++nodes;
        consider(a, size, boundary);
        if (size == cap) return;

        // Admissible bound: each future addition lowers the boundary by at
        // most degree, so give up once the incumbent is out of reach.
        if (boundary > best + static_cast<std::uint64_t>(degree) * (cap - size)) return;

        const std::size_t ban_mark = banned_stack.size();
        for (std::size_t k = idx; k < ext.size(); ++k) {
            const std::uint32_t v = ext[k];
            if (banned.test(v)) continue;

            BitVec overlap(nv);
            overlap.copy_from(adj[v]);
            overlap.and_with(a);
            const std::uint32_t gained = overlap.popcount();

            a.set(v);
            const std::size_t ext_mark = ext.size();
            adj[v].for_each_set([&](std::uint32_t w) {
                if (w > root && !a.test(w) && !banned.test(w) && !in_ext.test(w)) {
                    in_ext.set(w);
                    ext.push_back(w);
                }
            });

            grow(a, size + 1, boundary + degree - 2 * gained, ext, k + 1, banned, root);

            for (std::size_t j = ext_mark; j < ext.size(); ++j) in_ext.reset(ext[j]);
            ext.resize(ext_mark);
            a.reset(v);
            banned.set(v);
            banned_stack.push_back(v);
        }
        while (banned_stack.size() > ban_mark) {
            banned.reset(banned_stack.back());
            banned_stack.pop_back();
        }
    }

    void run() {
        for (std::uint32_t root = 0; root < nv && complete; ++root) {
            BitVec a(nv);
            a.set(root);
            BitVec banned(nv);
            in_ext = BitVec(nv);
            std::vector<std::uint32_t> ext;
            adj[root].for_each_set([&](std::uint32_t w) {
                if (w > root) {
                    in_ext.set(w);
                    ext.push_back(w);
                }
            });
            banned_stack.clear();
            grow(a, 1, degree, ext, 0, banned, root);
        }
    }

    BitVec in_ext;
    std::vector<std::uint32_t> banned_stack;
};

}  // namespace

ConnectivityResult extra_conn_fragment(const AugCube& g, int h, std::uint32_t size_cap,
                                       const SearchLimits& limits) {
    const auto start = Clock::now();
    const std::uint32_t nv = g.num_vertices();
    if (nv > 4096) throw CapacityError("fragment search requires |V| <= 4096");
    if (h < 0) throw std::invalid_argument("h must be nonnegative");
    if (size_cap == 0) size_cap = nv / 2;
    size_cap = std::min(size_cap, nv / 2);
    if (size_cap == 0) size_cap = 1;

    FragmentSearch search(g, h, size_cap, limits);
    search.run();

    ConnectivityResult res;
    res.kind = ConnKind::edge;
    res.method = Method::fragment;
    res.exact = search.complete;
    res.nodes_explored = search.nodes;
    if (search.best <= nv * static_cast<std::uint32_t>(g.degree())) {
        res.value = search.best;
        std::vector<std::pair<VertexId, VertexId>> cut;
        search.best_set.for_each_set([&](std::uint32_t v) {
            for (VertexId w : g.neighbors_of(v))
                if (!search.best_set.test(w))
                    cut.emplace_back(std::min<VertexId>(v, w), std::max<VertexId>(v, w));
        });
        std::sort(cut.begin(), cut.end());
        res.edge_cut = std::move(cut);
    }
    res.elapsed_ms = ms_since(start);
    return res;
}

}  // namespace aqn
