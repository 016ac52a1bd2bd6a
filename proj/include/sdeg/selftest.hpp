#pragma once

#include <string>
#include <vector>

namespace sdeg::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on pass
};

// Oracle-equivalence and invariant suites over all modules at desk scale.
// quick = true runs a reduced instance set.
std::vector<CheckResult> run(bool quick);

}  // namespace sdeg::selftest
