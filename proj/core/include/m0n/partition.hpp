#ifndef M0N_PARTITION_HPP
#define M0N_PARTITION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "m0n/subset.hpp"

namespace m0n {

// Unordered partition of [n] into 4 nonempty blocks. Canonical form sorts
// blocks by minimum element (so blocks[0] always contains 1); this is
// weight-independent and dedupes partitions before any weight datum exists.
struct Partition4 {
    std::array<Subset, 4> blocks;

    auto operator<=>(const Partition4&) const = default;
};

// All unordered 4-block partitions, in lexicographic order of the canonical
// block form. Generated as restricted growth strings filtered to exactly 4
// labels; count is the Stirling number S(n,4).
std::vector<Partition4> enumerate_partitions4(const GroundSet& g);

// Stirling numbers of the second kind via the standard DP recurrence.
// Serves as the independent count oracle for the enumerator.
std::uint64_t stirling2(int n, int k);

}  // namespace m0n

#endif
