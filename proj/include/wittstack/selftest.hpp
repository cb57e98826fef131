#ifndef WITTSTACK_SELFTEST_HPP
#define WITTSTACK_SELFTEST_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wittstack {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long long millis = 0;
};

// Runs the full acceptance battery, printing one pass/fail line per
// criterion as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream& progress);

}  // namespace wittstack

#endif
