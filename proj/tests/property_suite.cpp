// Randomized property suite over generated Fano polytopes (fixed seed).
#include <chrono>
#include <cstdio>
#include <iostream>

#include "properties.hpp"

int main() {
    using namespace latmut::testing;
    auto t0 = std::chrono::steady_clock::now();
    PropertyReport rep = run_property_suite(20120608u, 120, 90);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::printf("polytopes: %ld, mutation pairs: %ld, %.1f s\n", rep.polytopes,
                rep.mutation_pairs, secs);
    for (const auto& [name, c] : rep.counters) {
        std::printf("%-55s %6ld cases  %s\n", name.c_str(), c.cases,
                    c.failures == 0 ? "ok" : "FAIL");
        if (c.failures > 0)
            std::printf("    first failure: %s\n", c.first_failure.c_str());
    }
    if (!rep.all_pass) {
        std::printf("FAILED\n");
        return 1;
    }
    std::printf("all properties hold\n");
    return 0;
}
