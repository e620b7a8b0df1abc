#include "aqn/census.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "aqn/bitvec.hpp"

namespace aqn {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void take_min(std::optional<long>& slot, long value) {
    if (!slot || value < *slot) slot = value;
}
void take_max(std::optional<long>& slot, long value) {
    if (!slot || value > *slot) slot = value;
}

void require_dim(const AugCube& g, int lo, int hi, const char* check) {
    const int n = g.dim().n();
    if (n < lo || n > hi)
        throw CapacityError(std::string(check) + " runs exhaustively for " + std::to_string(lo) +
                            " <= n <= " + std::to_string(hi) + ", got n=" + std::to_string(n));
}

// Splits [0, count) into per-thread ranges, runs `body(first, last, report)`
// on each, and merges the partial reports in range order.
template <typename Body>
CensusReport run_partitioned(std::uint32_t count, int threads, Body&& body) {
    threads = std::max(1, std::min<int>(threads, 64));
    if (threads == 1 || count < 2) {
        CensusReport rep;
        body(0u, count, rep);
        return rep;
    }
    std::vector<CensusReport> parts(threads);
    std::vector<std::thread> pool;
    const std::uint32_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::uint32_t first = std::min<std::uint32_t>(t * chunk, count);
        const std::uint32_t last = std::min<std::uint32_t>(first + chunk, count);
        pool.emplace_back([&, first, last, t] { body(first, last, parts[t]); });
    }
    for (auto& th : pool) th.join();
    CensusReport merged = std::move(parts[0]);
    for (int t = 1; t < threads; ++t) merged.absorb(parts[t]);
    return merged;
}

}  // namespace

void CensusReport::absorb(const CensusReport& other) {
    instances += other.instances;
    for (const auto& [key, stat] : other.classes) {
        auto it = classes.find(key);
        if (it == classes.end()) {
            classes.emplace(key, stat);
        } else {
            it->second.count += stat.count;
            it->second.observed_min = std::min(it->second.observed_min, stat.observed_min);
            it->second.observed_max = std::max(it->second.observed_max, stat.observed_max);
        }
    }
    for (const auto& [value, count] : other.histogram) histogram[value] += count;
    if (other.observed_min) take_min(observed_min, *other.observed_min);
    if (other.observed_max) take_max(observed_max, *other.observed_max);
    if (other.subfamily_min) take_min(subfamily_min, *other.subfamily_min);
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

CensusReport census_path2(const AugCube& g, int threads) {
    require_dim(g, 5, 12, "the 2-path census");
    const auto start = Clock::now();
    const Dimension d = g.dim();
    const int n = d.n();
    const NeighborTable nbr(g);
    const std::uint32_t nv = g.num_vertices();

    auto rep = run_partitioned(nv, threads, [&](std::uint32_t first, std::uint32_t last,
                                                CensusReport& out) {
        BitVec np(nv), triple(nv);
        for (std::uint32_t x = first; x < last; ++x) {
            const auto ring = g.neighbors_of(x);
            for (std::size_t a = 0; a < ring.size(); ++a) {
                for (std::size_t b = a + 1; b < ring.size(); ++b) {
                    const VertexId y = ring[a], z = ring[b];
                    const PathClass cls = path2_class({x, y, z}, d);
                    const int expected = path2_expected_size(cls, n);

                    np.assign_or(nbr[x], nbr[y]);
                    np.or_with(nbr[z]);
                    np.reset(x);
                    np.reset(y);
                    np.reset(z);
                    const long observed = np.popcount();

                    triple.copy_from(nbr[x]);
                    triple.and_with(nbr[y]);
                    triple.and_with(nbr[z]);
                    const long common3 = triple.popcount();

                    ++out.instances;
                    auto& stat = out.classes[cls.key()];
                    if (stat.count == 0) {
                        stat.expected = expected;
                        stat.observed_min = stat.observed_max = static_cast<int>(observed);
                    }
                    ++stat.count;
                    stat.observed_min = std::min<int>(stat.observed_min, observed);
                    stat.observed_max = std::max<int>(stat.observed_max, observed);
                    take_min(out.observed_min, observed);
                    take_max(out.observed_max, observed);
                    if (path2_has_full_complement_end(cls, n))
                        take_min(out.subfamily_min, observed);

                    if (observed != expected)
                        out.violations.push_back({{x, y, z},
                                                  "|N(P)| differs from table row " + cls.key(),
                                                  observed,
                                                  expected});
                    if (common3 > 1)
                        out.violations.push_back(
                            {{x, y, z}, "triple common neighborhood exceeds 1", common3, 1});
                }
            }
        }
    });

    rep.check = "path2-census";
    rep.n = n;

    // Global bound checks on the merged extrema.
    if (!rep.observed_min || *rep.observed_min != 6 * n - 17)
        rep.violations.push_back({{},
                                  "minimum |N(P)| over all 2-paths is not 6n-17",
                                  rep.observed_min.value_or(-1),
                                  6 * n - 17});
    const PathClass tight{PathFamily::CC, 2, 2, 4};
    auto it = rep.classes.find(tight.key());
    if (it == rep.classes.end() || it->second.observed_min != 6 * n - 17)
        rep.violations.push_back({{},
                                  "class CC 'j=i+2, j<n' does not attain 6n-17",
                                  it == rep.classes.end() ? -1 : it->second.observed_min,
                                  6 * n - 17});
    if (!rep.subfamily_min || *rep.subfamily_min < 6 * n - 15)
        rep.violations.push_back({{},
                                  "subfamily with an X-bar_n end dips below 6n-15",
                                  rep.subfamily_min.value_or(-1),
                                  6 * n - 15});

    rep.elapsed_ms = ms_since(start);
    return rep;
}

CensusReport verify_edge_common_neighbors(const AugCube& g) {
    require_dim(g, 3, 10, "the per-edge common-neighbor census");
    const auto start = Clock::now();
    const Dimension d = g.dim();

    CensusReport rep;
    rep.check = "edge-common-neighbors";
    rep.n = d.n();

    for (auto [u, v] : g.edges()) {
        ++rep.instances;
        const auto brute = common_neighbors(u, v, d);
        const long size = static_cast<long>(brute.size());
        ++rep.histogram[size];
        take_min(rep.observed_min, size);
        take_max(rep.observed_max, size);
        if (size != 2 && size != 4)
            rep.violations.push_back({{u, v}, "common-neighbor count is neither 2 nor 4", size, 2});

        const auto kind = classify_edge(u, v, d);
        if (!kind) {
            rep.violations.push_back({{u, v}, "edge of the graph fails to classify", 0, 1});
            continue;
        }
        if (common_neighbors_formula(u, *kind, d) != brute)
            rep.violations.push_back(
                {{u, v}, "closed-form set differs from brute-force set for " + kind->to_string(),
                 size, size});
    }

    rep.elapsed_ms = ms_since(start);
    return rep;
}

CensusReport verify_pair_common_neighbors(const AugCube& g) {
    require_dim(g, 3, 8, "the all-pairs common-neighbor census");
    const auto start = Clock::now();
    const NeighborTable nbr(g);
    const std::uint32_t nv = g.num_vertices();

    CensusReport rep;
    rep.check = "pair-common-neighbors";
    rep.n = g.dim().n();

    BitVec common(nv);
    for (std::uint32_t u = 0; u < nv; ++u) {
        for (std::uint32_t v = u + 1; v < nv; ++v) {
            common.copy_from(nbr[u]);
            common.and_with(nbr[v]);
            const long size = common.popcount();
            ++rep.instances;
            ++rep.histogram[size];
            take_min(rep.observed_min, size);
            take_max(rep.observed_max, size);
            if (size > 4)
                rep.violations.push_back({{u, v}, "pair has more than 4 common neighbors", size, 4});
        }
    }

    rep.elapsed_ms = ms_since(start);
    return rep;
}

CensusReport verify_quad_bound(const AugCube& g, int threads) {
    require_dim(g, 5, 9, "the quad neighborhood census");
    const auto start = Clock::now();
    const Dimension d = g.dim();
    const int n = d.n();
    const NeighborTable nbr(g);
    const std::uint32_t nv = g.num_vertices();
    const long bound = 8 * n - 31;
    const long bound_full = 8 * n - 29;

    auto rep = run_partitioned(nv, threads, [&](std::uint32_t first, std::uint32_t last,
                                                CensusReport& out) {
        BitVec np(nv), quad(nv);
        std::vector<VertexId> frontier;
        for (std::uint32_t x = first; x < last; ++x) {
            const auto ring = g.neighbors_of(x);
            for (std::size_t a = 0; a < ring.size(); ++a) {
                for (std::size_t b = a + 1; b < ring.size(); ++b) {
                    const VertexId y = ring[a], z = ring[b];
                    const PathClass cls = path2_class({x, y, z}, d);
                    const bool full_end = path2_has_full_complement_end(cls, n);

                    np.assign_or(nbr[x], nbr[y]);
                    np.or_with(nbr[z]);
                    np.reset(x);
                    np.reset(y);
                    np.reset(z);

                    frontier.clear();
                    np.for_each_set([&](std::uint32_t u) { frontier.push_back(u); });

                    for (VertexId u : frontier) {
                        quad.assign_or(np, nbr[u]);
                        quad.reset(x);
                        quad.reset(y);
                        quad.reset(z);
                        quad.reset(u);
                        const long observed = quad.popcount();

                        ++out.instances;
                        take_min(out.observed_min, observed);
                        take_max(out.observed_max, observed);
                        if (full_end) take_min(out.subfamily_min, observed);

                        const long required = full_end ? bound_full : bound;
                        if (observed < required)
                            out.violations.push_back({{x, y, z, u},
                                                      full_end
                                                          ? "quad neighborhood below 8n-29"
                                                          : "quad neighborhood below 8n-31",
                                                      observed,
                                                      required});
                    }
                }
            }
        }
    });

    rep.check = "quad-neighborhood-bound";
    rep.n = n;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

}  // namespace aqn
