#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace fzzt::acceptance {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Check {
    int id = 0;
    std::string name;
    std::string tag;       // coarse group used by --filter
    double budget_s = 0.0; // 0: no runtime bound
    std::function<Outcome()> run;
};

const std::vector<Check>& checks();

struct RunSummary {
    int run = 0;
    int failed = 0;
};

/// Runs every check whose id, name or tag contains `filter` (all when the
/// filter is empty) and prints one line per check:
///   PASS 01 name  0.012s  detail
/// A check over its runtime budget fails.
RunSummary run_checks(const std::string& filter, std::ostream& out);

/// Runs a single check by id; returns false for an unknown id.
bool run_one(int id, std::ostream& out, bool& passed);

}  // namespace fzzt::acceptance
