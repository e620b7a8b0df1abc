#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aqn/errors.hpp"

namespace aqn {

// An n-bit vertex label x_n x_{n-1} ... x_1 packed into a machine word.
// Bit convention, used everywhere: x_i lives at bit position i-1, so the
// least significant bit is x_1.  This makes the low-bits complement a
// single xor with the mask 2^i - 1.
using VertexId = std::uint32_t;

class Dimension {
public:
    static constexpr int kMaxImplicit = 30;      // cap for formula-driven neighbor generation
    static constexpr int kMaxMaterialized = 20;  // cap for materialized adjacency

    explicit Dimension(int n) : n_(n) {
        if (n < 1 || n > kMaxImplicit)
            throw std::invalid_argument("dimension must be in [1, " +
                                        std::to_string(kMaxImplicit) + "], got " +
                                        std::to_string(n));
    }

    int n() const { return n_; }
    std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }

    // Vertex degree: 2n-1 for n >= 2, 1 for the single-edge base case.
    int degree() const { return n_ == 1 ? 1 : 2 * n_ - 1; }

    std::uint64_t edge_count() const {
        return n_ == 1 ? 1 : std::uint64_t(2 * n_ - 1) << (n_ - 1);
    }

    // AQ_1 = K_2 and AQ_2 = K_4; classical connectivity routines treat
    // complete graphs as a flagged convention.
    bool is_complete() const { return n_ <= 2; }

    VertexId label_mask() const { return static_cast<VertexId>((std::uint64_t{1} << n_) - 1); }

    bool contains(VertexId x) const { return (x & ~label_mask()) == 0; }

    friend bool operator==(Dimension a, Dimension b) { return a.n_ == b.n_; }

private:
    int n_;
};

enum class EdgeType : std::uint8_t { hypercube, complement };

// Classification of an adjacency: either the single-bit flip of dimension i
// (1 <= i <= n) or the low-bits complement of dimension i (2 <= i <= n).
// A pair differing only in bit 1 is always reported as hypercube dimension 1.
struct EdgeKind {
    EdgeType type;
    int dim;

    static EdgeKind hypercube(int i) { return {EdgeType::hypercube, i}; }
    static EdgeKind complement(int i) { return {EdgeType::complement, i}; }

    friend bool operator==(const EdgeKind& a, const EdgeKind& b) {
        return a.type == b.type && a.dim == b.dim;
    }

    std::string to_string() const {
        return (type == EdgeType::hypercube ? "hypercube(" : "complement(") +
               std::to_string(dim) + ")";
    }
};

enum class Half : std::uint8_t { L, R };  // leading bit x_n = 0 or 1

// X_i: flip bit i.
VertexId hyper_neighbor(VertexId x, int i, Dimension d);

// X-bar_i: flip bits i, i-1, ..., 1.  Defined for i = 1 as well (where it
// coincides with the bit-1 flip); adjacency semantics require i >= 2.
VertexId comp_neighbor(VertexId x, int i, Dimension d);

// The neighbor reached from x along an edge of the given kind.
VertexId edge_endpoint(VertexId x, EdgeKind kind, Dimension d);

// N(x): all 2n-1 neighbors for n >= 2 (one neighbor at n = 1), ascending.
std::vector<VertexId> neighbors(VertexId x, Dimension d);

// Classifies the pair (x, y): hypercube(i) if y = X_i, complement(i) if
// y = X-bar_i with i >= 2, empty if not adjacent.
std::optional<EdgeKind> classify_edge(VertexId x, VertexId y, Dimension d);

Half half(VertexId x, Dimension d);

// The two neighbors of x in the opposite half: (X_n, X-bar_n).  n >= 2.
std::pair<VertexId, VertexId> crossed_neighbors(VertexId x, Dimension d);

}  // namespace aqn
