#pragma once

#include <cstdint>
#include <vector>

#include "nodeorder/graph.hpp"
#include "nodeorder/refinement.hpp"

namespace nodeorder {

// Brute-force reference implementations, deliberately separate from the
// production algorithms so the two routes can check each other. Everything
// here is exponential and meant for small inputs only.

inline constexpr std::uint64_t kDefaultPathBound = 1'000'000;

// All walks of the given length starting at `origin` (consecutive nodes
// adjacent, revisits allowed), in lexicographic order without duplicates.
struct PathSet {
    int origin = 0;
    int length = 0;
    std::vector<std::vector<int>> paths;  // each of size length + 1
};

// Number of such walks, saturating at bound + 1 so callers can test overflow
// against the bound without materializing anything.
std::uint64_t walk_count(const Graph& g, int origin, int length,
                         std::uint64_t bound = kDefaultPathBound);

// Throws std::runtime_error if the walk count exceeds `bound`, and
// std::invalid_argument for an out-of-range origin or negative length.
PathSet enumerate_paths(const Graph& g, int origin, int length,
                        std::uint64_t bound = kDefaultPathBound);

// True iff there is an injective map from the length-l walks out of j to the
// length-l walks out of i that preserves shared prefixes in both directions
// (walks agree up to position m exactly when their images do) and never maps
// a walk onto one with a smaller degree at any position. Such a map exists
// iff the walk tree of j embeds level by level into the walk tree of i with
// siblings assigned injectively and end-node degrees dominating, which is
// what the backtracking below searches for directly.
// Throws like enumerate_paths when either walk set exceeds `bound`.
bool adapted_dominating_map_exists(const Graph& g, int j, int i, int length,
                                   std::uint64_t bound = kDefaultPathBound);

// Orbit partition of the automorphism group, found by trying all n!
// permutations. Throws std::invalid_argument when g.n() > 10.
Partition automorphism_orbits(const Graph& g);

}  // namespace nodeorder
