// Acceptance runner: no arguments runs every criterion; numeric arguments
// run those criteria only. Exit status 1 if any selected criterion fails.
#include "fzzt/acceptance/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    using namespace fzzt::acceptance;
    if (argc == 1) {
        const auto s = run_checks("", std::cout);
        std::cout << (s.run - s.failed) << "/" << s.run << " criteria passed\n";
        return s.failed == 0 ? 0 : 1;
    }
    bool all = true;
    for (int i = 1; i < argc; ++i) {
        char* end = nullptr;
        const long id = std::strtol(argv[i], &end, 10);
        bool passed = false;
        if (*end != '\0' || !run_one(static_cast<int>(id), std::cout, passed)) {
            std::cerr << "unknown criterion '" << argv[i] << "'\n";
            return 2;
        }
        all = all && passed;
    }
    return all ? 0 : 1;
}
