#pragma once

#include <string>
#include <vector>

namespace realcong {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the eight acceptance criteria; seed drives the randomized suites
// (REALCONG_SEED in the CLI).  jobs > 1 fans the criteria out on threads.
std::vector<CriterionResult> run_acceptance(unsigned seed, int jobs = 1);

}  // namespace realcong
