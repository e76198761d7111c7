// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "heatsym/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 20260801ull;
    int threads = 1;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
        if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) threads = std::atoi(argv[++i]);
    }
    if (const char* env = std::getenv("HEATSYM_THREADS")) threads = std::atoi(env);

    auto results = heatsym::verify::run_acceptance(seed, threads);
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%-3s %-55s %s  (%.2fs)  %s\n", r.id.c_str(), r.title.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("acceptance: %s\n", ok ? "all criteria passed" : "FAILURES PRESENT");
    return ok ? 0 : 1;
}
