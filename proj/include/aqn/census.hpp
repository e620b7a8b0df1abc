#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aqn/analytics.hpp"
#include "aqn/graph.hpp"

namespace aqn {

struct Violation {
    std::vector<VertexId> witness;  // the concrete vertices involved
    std::string what;               // which condition failed
    long observed = 0;
    long expected = 0;
};

struct ClassStat {
    std::uint64_t count = 0;
    int expected = 0;
    int observed_min = 0;
    int observed_max = 0;
};

// Outcome of an exhaustive scan: instance counts, per-class table stats,
// value histograms, observed extrema, and every counterexample found.
// Workers over disjoint instance ranges produce reports that merge
// associatively via absorb().
struct CensusReport {
    std::string check;
    int n = 0;
    std::uint64_t instances = 0;
    std::map<std::string, ClassStat> classes;
    std::map<long, std::uint64_t> histogram;
    std::optional<long> observed_min;
    std::optional<long> observed_max;
    std::optional<long> subfamily_min;  // over paths ending at X-bar_n, where applicable
    std::vector<Violation> violations;
    double elapsed_ms = 0;

    bool pass() const { return violations.empty(); }
    void absorb(const CensusReport& other);
};

// Scans every unordered 2-path of AQ_n (5 <= n <= 12) and checks:
//   - |N(P)| equals the class table value exactly,
//   - |N(P)| >= 6n-17 with the minimum attained by class CC "j=i+2, j<n",
//   - |N(P)| >= 6n-15 on the subfamily with an X-bar_n end,
//   - |N(X) ∩ N(Y) ∩ N(Z)| <= 1.
CensusReport census_path2(const AugCube& g, int threads = 1);

// Scans every edge of AQ_n (3 <= n <= 10): common-neighbor count is 2 or 4,
// and the closed-form set equals the brute-force intersection exactly.
CensusReport verify_edge_common_neighbors(const AugCube& g);

// Scans every vertex pair of AQ_n (3 <= n <= 8): at most 4 common neighbors.
CensusReport verify_pair_common_neighbors(const AugCube& g);

// Scans every 2-path P and every U in N(P) (5 <= n <= 9) and checks
// |N({X, Y, Z, U})| >= 8n-31, strengthened to 8n-29 when one path end is
// X-bar_n.  Observed minima are reported; tightness is not asserted.
CensusReport verify_quad_bound(const AugCube& g, int threads = 1);

}  // namespace aqn
