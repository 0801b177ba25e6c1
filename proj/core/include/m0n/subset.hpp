#ifndef M0N_SUBSET_HPP
#define M0N_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace m0n {

// Fixed-width bit-sets over marked points 1..n. n is capped at kMaxGround;
// enumeration beyond n ~ 14 is out of desk scale anyway, and a fixed width
// gives O(1) complement/union/intersection and cheap hashing.
inline constexpr int kMaxGround = 16;

struct GroundSet {
    int n;

    explicit GroundSet(int n_) : n(n_) {
        if (n < 4) throw std::invalid_argument("ground set requires n >= 4");
        if (n > kMaxGround)
            throw std::invalid_argument("ground set capped at n <= 16");
    }

    std::uint32_t full_mask() const { return (std::uint32_t{1} << n) - 1; }
};

// Marked point i (1-based) lives at bit i-1.
struct Subset {
    std::uint32_t bits = 0;

    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t b) : bits(b) {}

    static Subset of(std::initializer_list<int> members) {
        std::uint32_t b = 0;
        for (int i : members) b |= std::uint32_t{1} << (i - 1);
        return Subset(b);
    }

    constexpr bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr int min_element() const { return std::countr_zero(bits) + 1; }

    constexpr Subset operator|(Subset o) const { return Subset(bits | o.bits); }
    constexpr Subset operator&(Subset o) const { return Subset(bits & o.bits); }

    auto operator<=>(const Subset&) const = default;

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }
};

inline Subset complement(Subset I, const GroundSet& g) {
    if (I.empty() || I.bits == g.full_mask())
        throw std::invalid_argument("complement requires a nonempty proper subset");
    return Subset(~I.bits & g.full_mask());
}

// The storage key for a complementary pair {I, I^c}: the side containing
// marked point 1. Weight-independent, so classes built for different weight
// data over the same n share coordinates.
inline Subset pair_key(Subset I, const GroundSet& g) {
    return I.contains(1) ? I : Subset(~I.bits & g.full_mask());
}

// Size of the smaller side of the pair; pairs with min side <= 1 carry the
// class D_I = 0.
inline int pair_min_size(Subset I, const GroundSet& g) {
    int k = I.size();
    return k <= g.n - k ? k : g.n - k;
}

// Visits each complementary pair {I, I^c} of nonempty proper subsets exactly
// once (representative = the side containing 1), in increasing bit order.
// Total count is 2^(n-1) - 1.
template <typename F>
void for_each_subset_pair(const GroundSet& g, F&& f) {
    std::uint32_t rest = std::uint32_t{1} << (g.n - 1);
    for (std::uint32_t m = 0; m + 1 < rest; ++m) {
        f(Subset(1u | (m << 1)));
    }
}

}  // namespace m0n

#endif
