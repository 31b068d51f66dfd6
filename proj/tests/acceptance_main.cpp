// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run directly or through ctest.
#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "sixv/selftest.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 12345;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    auto results = sixv::selftest::run_acceptance(seed, &std::cerr);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s  criterion %-70s  observed=%.3g  threshold=%.3g  [%.1f s]\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.observed, r.threshold,
                    r.seconds);
        if (!r.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", int(results.size()) - failures,
                results.size());
    return failures;
}
