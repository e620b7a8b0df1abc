// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <iostream>

#include "aqn/acceptance.hpp"

int main() {
    const auto results = aqn::run_acceptance(&std::cout);
    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;
    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << results.size() - failures << "/" << results.size() << " criteria)\n";
    return failures == 0 ? 0 : 1;
}
