// Randomised property run shared by the CLI "selftest" command.

#ifndef NFAEQ_SELFTEST_HH
#define NFAEQ_SELFTEST_HH

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nfaeq {

struct SelftestOptions {
    std::size_t max_states = 5;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t maxlen = 5;
};

/// Runs every property on `trials` random automaton pairs and writes one line
/// per failed property to log, in trial order. Returns the failure count.
std::size_t run_selftest(const SelftestOptions& opts, std::ostream& log);

}  // namespace nfaeq

#endif  // NFAEQ_SELFTEST_HH
