#ifndef SIXV_SELFTEST_HPP
#define SIXV_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sixv::selftest {

struct CheckResult {
    std::string name;
    bool pass;
    double observed;   // worst observed value
    double threshold;  // pinned acceptance threshold
    double seconds;
};

// Runs the full acceptance suite (all nine criteria).  Progress lines go to
// `progress` when non-null; one result per criterion.
std::vector<CheckResult> run_acceptance(std::uint64_t seed, std::ostream* progress);

// Randomized theta-identity sweep (criterion 4 and the `identities`
// subcommand): max residual over `trials` draws for every identity tag.
struct IdentitySweep {
    double max_residual;
    std::string worst_identity;
    int trials;
};
IdentitySweep identity_sweep(std::uint64_t seed, int trials);

bool all_pass(const std::vector<CheckResult>& results);

} // namespace sixv::selftest

#endif
