#ifndef TCKIT_VERIFY_HPP
#define TCKIT_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "tckit/multigraph.hpp"

namespace tckit {

// Census-wide property battery. The immersion oracle is injected so the
// independent re-checker stays outside the core library.
using ImmersionOracle = std::function<bool(const MultiGraph&, const MultiGraph&)>;

struct VerifyOptions {
    int max_vertices = 4;
    int max_edges = 6;
    int loop_cap = 3;
    int parallel_cap = 3;
    int theta_max = 4;
    int xi = 3;
    std::uint64_t seed = 20240817;
    int sample_count = 10;
    int random_instances = 1000;
    // Oracle-agreement bounds (criterion 7).
    int pattern_max_vertices = 3;
    int pattern_max_edges = 4;
    int host_max_vertices = 5;
    int host_max_edges = 7;
};

struct CriterionResult {
    std::string name;
    bool pass = true;
    long long checks = 0;
    std::string detail;  // first counterexample, when failing
};

std::vector<CriterionResult> run_verification(const VerifyOptions& opts,
                                              const ImmersionOracle& oracle);

// Documented ceilings for the battery (capacity errors beyond these).
inline constexpr int kVerifyMaxVertices = 5;
inline constexpr int kVerifyMaxEdges = 8;

}  // namespace tckit

#endif
