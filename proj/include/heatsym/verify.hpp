#ifndef HEATSYM_VERIFY_HPP
#define HEATSYM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace heatsym::verify {

struct CheckResult {
    std::string id;
    std::string title;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

/// Runs the full acceptance suite (A1..A8).  Deterministic for a fixed
/// seed; `threads` parallelizes the instance loop of A1.
std::vector<CheckResult> run_acceptance(std::uint64_t seed = 20260801ull, int threads = 1);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace heatsym::verify

#endif
