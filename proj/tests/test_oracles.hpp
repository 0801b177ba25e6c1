#ifndef M0N_TEST_ORACLES_HPP
#define M0N_TEST_ORACLES_HPP

// Independent oracles for the things the production code computes by
// formula or clever enumeration. These deliberately take the slow, obvious
// route and must not share code with the implementation paths they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "m0n/curves.hpp"
#include "m0n/divisor.hpp"

namespace m0n::test {

// All 4-block partitions by brute force: every function [n] -> {0,1,2,3}
// that hits all four labels, deduplicated modulo label permutation.
inline std::set<std::array<std::set<int>, 4>> brute_force_partitions4(int n) {
    std::set<std::array<std::set<int>, 4>> out;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::array<std::set<int>, 4> blocks;
        std::uint64_t c = code;
        for (int i = 1; i <= n; ++i) {
            blocks[c % 4].insert(i);
            c /= 4;
        }
        bool all = true;
        for (const auto& b : blocks)
            if (b.empty()) all = false;
        if (!all) continue;
        std::sort(blocks.begin(), blocks.end(),
                  [](const std::set<int>& a, const std::set<int>& b) {
                      return *a.begin() < *b.begin();
                  });
        out.insert(blocks);
    }
    return out;
}

// Stirling numbers of the second kind by inclusion-exclusion:
// S(n,4) = (4^n - 4*3^n + 6*2^n - 4*1^n) / 24.
inline std::uint64_t stirling4_inclusion_exclusion(int n) {
    auto pw = [](std::uint64_t b, int e) {
        std::uint64_t r = 1;
        while (e--) r *= b;
        return r;
    };
    return (pw(4, n) - 4 * pw(3, n) + 6 * pw(2, n) - 4) / 24;
}

// Pairing by brute force over every boundary coordinate.
inline Rational brute_force_pair(const DivisorClass& d, const Partition4& c) {
    Rational v = 0;
    const GroundSet& g = d.ground();
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        v += d.coeff(rep) * pair_boundary(rep, c, g);
    });
    return v;
}

}  // namespace m0n::test

#endif
