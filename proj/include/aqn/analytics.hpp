#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqn/core.hpp"

namespace aqn {

// Brute-force oracle N(x) ∩ N(y), ascending.  x != y.
std::vector<VertexId> common_neighbors(VertexId x, VertexId y, Dimension d);

// Closed-form common neighborhood of x and its neighbor along `kind`:
//   hypercube(1)            -> { X_2, X-bar_2 }
//   hypercube(i), i > 1     -> { X-bar_i, X-bar_{i-1} }
//   complement(i), i <= n-1 -> { X_i, X_{i+1}, X-bar_{i-1}, X-bar_{i+1} }
//   complement(n)           -> { X-bar_{n-1}, X_n }
// Ascending; equals common_neighbors(x, edge_endpoint(x, kind)).
std::vector<VertexId> common_neighbors_formula(VertexId x, EdgeKind kind, Dimension d);

// N(T) = union of the members' neighborhoods minus T itself.  Ascending.
std::vector<VertexId> neighborhood_of_set(std::span<const VertexId> t, Dimension d);

// Edges with exactly one endpoint in T, normalized u < v, ascending.
std::vector<std::pair<VertexId, VertexId>> edge_boundary(std::span<const VertexId> t,
                                                         Dimension d);

// ---------------------------------------------------------------------------
// 2-path classification.
//
// A 2-path (Y, X, Z) falls into one of three families by the kinds of its
// two center edges: both hypercube (HH), both complement (CC), or mixed
// (HC, with the hypercube end canonically first).  Within each family the
// (i, j) dimension pair selects a row of a fixed case table that pins
// |N({X, Y, Z})| exactly; rows are matched top to bottom, first match wins.
// The tables hold for n >= 5.
// ---------------------------------------------------------------------------

enum class PathFamily : std::uint8_t { HH, CC, HC };

struct PathClass {
    PathFamily family;
    int row;  // first-match row index within the family table
    int i;    // HH/CC: i < j; HC: hypercube dimension
    int j;    // HH/CC: i < j; HC: complement dimension

    // Stable key such as "CC/02 j=i+2, j<n"; used for report tables.
    std::string key() const;

    friend bool operator==(const PathClass& a, const PathClass& b) {
        return a.family == b.family && a.row == b.row;
    }
};

// An ordered 2-path (y, x, z) with both ends adjacent to the center.
struct PathTriple {
    VertexId center;
    VertexId y;
    VertexId z;
};

// Classifies the 2-path.  Requires n >= 5 (below that the case tables are
// out of range).  Throws std::invalid_argument if (y, x, z) is not a 2-path
// or n < 5.
PathClass path2_class(const PathTriple& p, Dimension d);

// Table value of |N(P)| for the class at dimension n.
int path2_expected_size(const PathClass& c, int n);

const char* path2_row_label(PathFamily family, int row);
const char* path_family_name(PathFamily family);
int path2_row_count(PathFamily family);

// True when one end of the classified path is the full-complement neighbor
// X-bar_n of the center (the subfamily with the strengthened 6n-15 bound).
bool path2_has_full_complement_end(const PathClass& c, int n);

}  // namespace aqn
