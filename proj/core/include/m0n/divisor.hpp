#ifndef M0N_DIVISOR_HPP
#define M0N_DIVISOR_HPP

#include <map>

#include "m0n/rational.hpp"
#include "m0n/subset.hpp"
#include "m0n/weights.hpp"

namespace m0n {

// A divisor class in the boundary basis: one exact-rational coordinate per
// complementary pair {I, I^c} with both sides of size >= 2. Pairs with a
// side of size <= 1 carry the zero class and are never stored. Coordinates
// are keyed by the weight-independent pair key (side containing point 1) so
// classes built for different weight data share a coordinate system;
// coefficient values for weight-dependent formulas are always computed from
// the canonical (lighter-side) representative.
class DivisorClass {
public:
    explicit DivisorClass(GroundSet g) : g_(g) {}

    const GroundSet& ground() const { return g_; }

    // Coefficient of the pair containing I; 0 for absent keys and for
    // pairs with min side <= 1.
    Rational coeff(Subset I) const;

    // Adds v to the pair's coordinate. Writes to a zero-by-convention pair
    // (min side <= 1) are discarded.
    void add(Subset I, const Rational& v);

    bool is_zero() const;
    std::vector<Subset> support() const;  // pair keys with nonzero coefficient

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& s);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }

    bool operator==(const DivisorClass& o) const;

    const std::map<Subset, Rational>& coords() const { return coeffs_; }

private:
    GroundSet g_;
    std::map<Subset, Rational> coeffs_;  // sparse; absent key == 0
};

// A class on the Hassett model, kept in the ambient coordinate system with
// all contracted coordinates zeroed.
struct HassettClass {
    DivisorClass cls;
    std::vector<CanonicalSubset> contracted;
};

// psi_i expanded in the boundary basis: coefficient of D_I is
// (n-|I|)(n-|I|-1)/((n-1)(n-2)) when i in I, |I|(|I|-1)/((n-1)(n-2)) otherwise.
DivisorClass psi_class(const GroundSet& g, int i);

// K: coefficient |I|(n-|I|)/(n-1) - 2.
DivisorClass canonical_class(const GroundSet& g);

// Total boundary D (coefficient 1 everywhere) and total psi class
// (coefficient |I|(n-|I|)/(n-1)); psi = K + 2D.
DivisorClass total_boundary(const GroundSet& g);
DivisorClass total_psi(const GroundSet& g);

// Delta_A = K + sum a_i psi_i, in closed form.
DivisorClass delta(const WeightDatum& A);

// Pushforward along the reduction morphism: zeroes coordinates in C.
// Interior regime only.
HassettClass pushforward(const DivisorClass& d, const WeightDatum& A);

// Pullback of the pushforward of delta. The production path uses the
// collapsed coefficient on C; pullback_pushforward_jsum evaluates the
// uncollapsed sum over 2-subsets J of I and serves as the oracle for it.
DivisorClass pullback_pushforward(const WeightDatum& A);
DivisorClass pullback_pushforward_jsum(const WeightDatum& A);

// Closed form sum over I in C, 2 <= |I| <= n-2 of (|I|-2)(1-w_I) D_I.
// Interior regime: equals delta - pullback_pushforward. Boundary regime:
// equals delta - delta_prime.
DivisorClass difference_closed_form(const WeightDatum& A);

// Boundary-regime class with coefficient
// (n-4) * ( -C(|I|,2) * 2/((n-1)(n-2)) + (|I|-1) w_I / (n-2) )
// evaluated at the canonical representative. Zero when n = 4.
DivisorClass delta_prime(const WeightDatum& A);

}  // namespace m0n

#endif
