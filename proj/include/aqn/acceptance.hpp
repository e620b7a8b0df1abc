#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aqn {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double runtime_ms = 0;
};

// Runs the full acceptance checklist: the pinned connectivity values, the
// exhaustive censuses, and the constructed-cut certificates, each at its
// fixed dimension range and tolerance.  Progress lines go to `progress`
// when given.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

}  // namespace aqn
