#include "aqn/analytics.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <unordered_set>

namespace aqn {

std::vector<VertexId> common_neighbors(VertexId x, VertexId y, Dimension d) {
    if (x == y) throw std::invalid_argument("common_neighbors requires distinct vertices");
    auto nx = neighbors(x, d);
    auto ny = neighbors(y, d);
    std::vector<VertexId> out;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(out));
    return out;
}

std::vector<VertexId> common_neighbors_formula(VertexId x, EdgeKind kind, Dimension d) {
    const int n = d.n();
    const int i = kind.dim;
    std::vector<VertexId> out;
    if (kind.type == EdgeType::hypercube) {
        if (i < 1 || i > n) throw std::invalid_argument("hypercube dimension out of range");
        if (i == 1) {
            out = {hyper_neighbor(x, 2, d), comp_neighbor(x, 2, d)};
        } else {
            out = {comp_neighbor(x, i, d), comp_neighbor(x, i - 1, d)};
        }
    } else {
        if (i < 2 || i > n) throw std::invalid_argument("complement dimension out of range");
        if (i <= n - 1) {
            out = {hyper_neighbor(x, i, d), hyper_neighbor(x, i + 1, d),
                   comp_neighbor(x, i - 1, d), comp_neighbor(x, i + 1, d)};
        } else {
            out = {comp_neighbor(x, n - 1, d), hyper_neighbor(x, n, d)};
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> neighborhood_of_set(std::span<const VertexId> t, Dimension d) {
    if (t.empty()) throw std::invalid_argument("neighborhood_of_set requires a nonempty set");
    std::unordered_set<VertexId> members(t.begin(), t.end());
    std::unordered_set<VertexId> acc;
    for (VertexId u : t)
        for (VertexId w : neighbors(u, d))
            if (!members.count(w)) acc.insert(w);
    std::vector<VertexId> out(acc.begin(), acc.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<VertexId, VertexId>> edge_boundary(std::span<const VertexId> t,
                                                         Dimension d) {
    if (t.empty()) throw std::invalid_argument("edge_boundary requires a nonempty set");
    std::unordered_set<VertexId> members(t.begin(), t.end());
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId u : t)
        for (VertexId w : neighbors(u, d))
            if (!members.count(w)) out.emplace_back(std::min(u, w), std::max(u, w));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Case tables.  Each row stores the condition label and the constant c of
// the row's size 6n - c.
// ---------------------------------------------------------------------------

namespace {

struct Row {
    const char* label;
    int offset;  // |N(P)| = 6n - offset
};

constexpr std::array<Row, 3> kRowsHH = {{
    {"i=1, j=2,3", 13},
    {"i>1, j=i+1", 13},
    {"otherwise", 12},
}};

constexpr std::array<Row, 6> kRowsCC = {{
    {"j=i+1, j<n", 15},
    {"j=i+1, j=n", 13},
    {"j=i+2, j<n", 17},
    {"j=i+2, j=n", 15},
    {"j>=i+3, j<n", 16},
    {"j>=i+3, j=n", 14},
}};

constexpr std::array<Row, 13> kRowsHC = {{
    {"i=1, j=2", 13},
    {"i=1, j=3", 15},
    {"i=1, 4<=j<n", 14},
    {"i=1, j=n", 12},
    {"i=j=2", 13},
    {"3<=i=j<=n-1", 15},
    {"i=j=n", 13},
    {"j=i-1, 3<=i<=n-1 or j=i+1, 2<=i<=n-2", 15},
    {"j=i-1, i=n", 13},
    {"j=n, i=n-1", 13},
    {"j=i-2, i>=4", 15},
    {"j<=i-3, i>=5 or j>=i+2, j<n", 14},
    {"j>=i+2, j=n", 12},
}};

int match_row_hh(int i, int j, int n) {
    (void)n;
    if (i == 1 && (j == 2 || j == 3)) return 0;
    if (i > 1 && j == i + 1) return 1;
    return 2;
}

int match_row_cc(int i, int j, int n) {
    if (j == i + 1) return j < n ? 0 : 1;
    if (j == i + 2) return j < n ? 2 : 3;
    return j < n ? 4 : 5;  // j >= i+3
}

int match_row_hc(int i, int j, int n) {
    if (i == 1 && j == 2) return 0;
    if (i == 1 && j == 3) return 1;
    if (i == 1 && j >= 4 && j < n) return 2;
    if (i == 1 && j == n) return 3;
    if (i == 2 && j == 2) return 4;
    if (i == j && i >= 3 && i <= n - 1) return 5;
    if (i == j && i == n) return 6;
    if ((j == i - 1 && i >= 3 && i <= n - 1) || (j == i + 1 && i >= 2 && i <= n - 2)) return 7;
    if (j == i - 1 && i == n) return 8;
    if (j == n && i == n - 1) return 9;
    if (j == i - 2 && i >= 4) return 10;
    if ((j <= i - 3 && i >= 5) || (j >= i + 2 && j < n)) return 11;
    if (j >= i + 2 && j == n) return 12;
    throw std::logic_error("HC table does not cover i=" + std::to_string(i) +
                           ", j=" + std::to_string(j) + ", n=" + std::to_string(n));
}

const Row& row_of(PathFamily family, int row) {
    switch (family) {
        case PathFamily::HH: return kRowsHH.at(row);
        case PathFamily::CC: return kRowsCC.at(row);
        case PathFamily::HC: return kRowsHC.at(row);
    }
    throw std::logic_error("bad family");
}

}  // namespace

std::string PathClass::key() const {
    char buf[8];
    std::snprintf(buf, sizeof buf, "/%02d ", row);
    return std::string(path_family_name(family)) + buf + path2_row_label(family, row);
}

PathClass path2_class(const PathTriple& p, Dimension d) {
    if (d.n() < 5)
        throw std::invalid_argument("2-path classification requires n >= 5, got " +
                                    std::to_string(d.n()));
    if (p.y == p.z) throw std::invalid_argument("2-path ends must be distinct");
    auto ky = classify_edge(p.center, p.y, d);
    auto kz = classify_edge(p.center, p.z, d);
    if (!ky || !kz) throw std::invalid_argument("2-path ends must be adjacent to the center");

    // Canonical order: hypercube end first in the mixed family, ascending
    // dimensions otherwise.
    EdgeKind a = *ky, b = *kz;
    if (a.type == b.type) {
        int i = std::min(a.dim, b.dim), j = std::max(a.dim, b.dim);
        if (a.type == EdgeType::hypercube)
            return {PathFamily::HH, match_row_hh(i, j, d.n()), i, j};
        return {PathFamily::CC, match_row_cc(i, j, d.n()), i, j};
    }
    if (a.type == EdgeType::complement) std::swap(a, b);
    return {PathFamily::HC, match_row_hc(a.dim, b.dim, d.n()), a.dim, b.dim};
}

int path2_expected_size(const PathClass& c, int n) {
    if (n < 5) throw std::invalid_argument("case tables require n >= 5");
    return 6 * n - row_of(c.family, c.row).offset;
}

const char* path2_row_label(PathFamily family, int row) { return row_of(family, row).label; }

const char* path_family_name(PathFamily family) {
    switch (family) {
        case PathFamily::HH: return "HH";
        case PathFamily::CC: return "CC";
        case PathFamily::HC: return "HC";
    }
    return "?";
}

int path2_row_count(PathFamily family) {
    switch (family) {
        case PathFamily::HH: return static_cast<int>(kRowsHH.size());
        case PathFamily::CC: return static_cast<int>(kRowsCC.size());
        case PathFamily::HC: return static_cast<int>(kRowsHC.size());
    }
    return 0;
}

bool path2_has_full_complement_end(const PathClass& c, int n) {
    if (c.family == PathFamily::HH) return false;
    return c.j == n;  // j is the (larger/mixed) complement dimension
}

}  // namespace aqn
