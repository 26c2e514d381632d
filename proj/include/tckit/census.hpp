#ifndef TCKIT_CENSUS_HPP
#define TCKIT_CENSUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "tckit/multigraph.hpp"

namespace tckit {

// Minimum adjacency-multiset string over all vertex permutations, e.g.
// "3:0-1,0-2,1-2". No external canonical-labeling dependency.
std::string canonical_form(const MultiGraph& g);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);

inline constexpr int kCensusMaxVertices = 6;

struct CensusOptions {
    int vertices = 0;        // exact vertex count of the emitted graphs
    int max_edges = 0;
    int loop_cap = 3;        // per-vertex
    int parallel_cap = 3;    // per unordered pair
    bool connected_only = false;
    bool loopless = false;
    bool simple = false;     // implies loopless, parallel_cap 1
};

// One representative per isomorphism class, sorted by canonical form.
std::vector<MultiGraph> census(const CensusOptions& opts);

// Union over vertex counts 1..max_vertices; the usual verification corpus.
std::vector<MultiGraph> census_up_to(int max_vertices, int max_edges, bool connected_only = true,
                                     int loop_cap = 3, int parallel_cap = 3);

}  // namespace tckit

#endif
