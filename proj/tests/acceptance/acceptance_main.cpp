// Acceptance suite: runs every criterion of the verification battery at
// the pinned bounds and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "oracles.hpp"
#include "tckit/verify.hpp"

int main() {
    using Clock = std::chrono::steady_clock;
    tckit::VerifyOptions opts;
    opts.max_vertices = 4;        // census: connected, <= 4 vertices
    opts.max_edges = 6;           // <= 6 edges, loops/parallel capped at 3
    opts.loop_cap = 3;
    opts.parallel_cap = 3;
    opts.theta_max = 4;           // smoothing orders 1..4
    opts.xi = 3;
    opts.seed = 20240817;
    opts.random_instances = 1000; // restriction-bound instances
    opts.pattern_max_vertices = 3;
    opts.pattern_max_edges = 4;
    opts.host_max_vertices = 5;
    opts.host_max_edges = 7;

    auto start = Clock::now();
    std::vector<tckit::CriterionResult> results;
    try {
        results = tckit::run_verification(opts, tckit::oracles::immersion_oracle);
    } catch (const std::exception& e) {
        std::cout << "FAIL criterion-0 battery aborted: " << e.what() << '\n';
        return 1;
    }
    bool all = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        all = all && r.pass;
        std::printf("%s criterion-%zu %s (%lld checks)%s%s\n", r.pass ? "PASS" : "FAIL", i + 1,
                    r.name.c_str(), r.checks, r.detail.empty() ? "" : " -- ",
                    r.detail.c_str());
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start).count();
    std::printf("%s acceptance suite in %llds\n", all ? "PASS" : "FAIL",
                static_cast<long long>(secs));
    return all ? 0 : 1;
}
