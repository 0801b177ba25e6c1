#ifndef M0N_CURVES_HPP
#define M0N_CURVES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "m0n/divisor.hpp"
#include "m0n/partition.hpp"
#include "m0n/weights.hpp"

namespace m0n {

// A vital curve C(S1,S2,S3,S4) with its blocks reordered for a weight datum
// so that w1 <= w2 <= w3 <= w4 (ties broken by block minimum element).
struct VitalCurve {
    Partition4 partition;                 // weight-independent canonical form
    std::array<Subset, 4> ordered;        // weight-sorted blocks
    std::array<int, 4> block_size;        // T_j
    std::array<Rational, 4> block_weight; // w_j
    Rational total_weight;                // w = sum a_i
};

VitalCurve make_curve(const Partition4& p, const WeightDatum& A);

// The 7-symbol type (s1,s2,s3,s4,s12,s13,s14) over {-,+,*}:
// '-' means x <= 1, '+' means 1 < x < w-1, '*' means x >= w-1,
// applied to block weights and to pair sums w1+wj.
struct CurveType {
    std::array<char, 7> symbols;

    std::string str() const;  // "(-,-,-,+,+,+,+)"
    auto operator<=>(const CurveType&) const = default;
};

struct UnlistedTypeError : std::domain_error {
    CurveType type;
    explicit UnlistedTypeError(const CurveType& t)
        : std::domain_error("curve type " + t.str() + " is not among the 13 table rows"),
          type(t) {}
};

// Pairing of a boundary pair with a vital curve: -1 if the pair matches a
// block, +1 if it matches a union of two blocks, 0 otherwise; pairs with a
// side of size <= 1 pair to 0.
int pair_boundary(Subset I, const Partition4& c, const GroundSet& g);

// Linear extension over a class's coordinates. Walks the curve's at most 7
// incident pairs rather than the class's support.
Rational pair(const DivisorClass& d, const Partition4& c);

// Contraction test: the curve is contracted iff w - w4 <= 1.
bool is_contracted(const VitalCurve& c);

// Type of a non-contracted curve; throws std::domain_error on contracted
// input (no type is defined there).
CurveType classify(const VitalCurve& c);

// Table row evaluation, returned as the row's individual summands (their
// sum is the intersection number). Throws UnlistedTypeError for a type
// outside the 13 rows.
std::vector<Rational> table_summands(const CurveType& t, const VitalCurve& c, int n);
Rational table_value(const CurveType& t, const VitalCurve& c, int n);

// Piecewise pairing of delta_prime with a vital curve (boundary regime):
// 0 if w4 >= 1; (n-4)(1-w4) if w4 <= 1 and w1+w4 >= 1; (n-4)w1 otherwise.
Rational delta_prime_pairing(const VitalCurve& c, const WeightDatum& A);

struct CurveEntry {
    VitalCurve curve;
    bool contracted = false;
    std::optional<CurveType> type;  // set iff not contracted and Interior
};

// One entry per unordered partition, in the deterministic partition order.
// Interior regime attaches types to non-contracted curves; Boundary regime
// yields curves without types.
std::vector<CurveEntry> enumerate_curves(const WeightDatum& A);

// Rank over Q of the {boundary pairs} x {vital curves} pairing matrix,
// by exact Gaussian elimination. Expected value: 2^(n-1) - C(n,2) - 1.
int pairing_matrix_rank(const GroundSet& g);
long expected_picard_rank(int n);

}  // namespace m0n

#endif
