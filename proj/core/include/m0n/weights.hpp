#ifndef M0N_WEIGHTS_HPP
#define M0N_WEIGHTS_HPP

#include <stdexcept>
#include <vector>

#include "m0n/rational.hpp"
#include "m0n/subset.hpp"

namespace m0n {

// Total weight regimes. Interior: sum > 2 (Hassett reduction). Boundary:
// sum = 2 (GIT linearization). Sums below 2 are a hard construction error.
enum class Regime { Interior, Boundary };

enum class WeightFault { NonPositive, AboveOne, TotalBelowTwo, TooFew };

class WeightError : public std::invalid_argument {
public:
    WeightError(WeightFault fault, std::string msg)
        : std::invalid_argument(std::move(msg)), fault_(fault) {}
    WeightFault fault() const { return fault_; }

private:
    WeightFault fault_;
};

// A weight datum: n exact rationals with 0 < a_i <= 1 and sum >= 2.
class WeightDatum {
public:
    explicit WeightDatum(std::vector<Rational> a);

    int n() const { return static_cast<int>(a_.size()); }
    GroundSet ground() const { return GroundSet(n()); }
    const Rational& weight(int i) const { return a_[i - 1]; }  // 1-based
    const std::vector<Rational>& entries() const { return a_; }
    const Rational& total() const { return total_; }
    Regime regime() const { return regime_; }

    Rational weight_of(Subset I) const;

    bool symmetric() const;

    bool operator==(const WeightDatum& o) const { return a_ == o.a_; }

private:
    std::vector<Rational> a_;
    Rational total_;
    Regime regime_;
};

// The chosen representative of {I, I^c}: smaller weight, ties broken by
// smaller size, then by containing marked point 1.
struct CanonicalSubset {
    Subset members;
    Rational weight;
    int size = 0;

    bool operator==(const CanonicalSubset& o) const { return members == o.members; }
};

CanonicalSubset canonicalize(Subset I, const WeightDatum& A);

// The contracted collection C: every canonical I with w_I <= 1, singletons
// included, sorted by representative bits.
std::vector<CanonicalSubset> contracted_collection(const WeightDatum& A);

}  // namespace m0n

#endif
