#pragma once

// Brute-force counting oracles, independent of every recurrence code path.
// Set-partition kinds walk restricted-growth strings; permutation kinds walk
// all permutations and count cycles. Used to validate the exact tables.

#include <touchard/integer.hpp>

namespace touchard {

enum class EnumKind {
    PARTITIONS,               // partitions of an n-set
    PARTITIONS_NO_SINGLETON,  // partitions of an n-set with no singleton block
    DERANGEMENTS,             // fixed-point-free permutations of n elements
    RSTIRLING1,               // permutations of an (n+r)-set, k+r cycles, r separated
    RSTIRLING2,               // partitions of an (n+r)-set, k+r blocks, r separated
};

// Counts objects by direct exhaustive generation. k and r are required for the
// r-Stirling kinds and ignored otherwise. Rejects n + r > 12 (enumeration
// bound). Results are memoized per (kind, n, r).
Integer enumerate_oracle(EnumKind kind, long n, long k = -1, long r = 0);

}  // namespace touchard
