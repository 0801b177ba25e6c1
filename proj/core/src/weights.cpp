#include "m0n/weights.hpp"

#include <algorithm>

namespace m0n {

WeightDatum::WeightDatum(std::vector<Rational> a) : a_(std::move(a)), total_(0) {
    if (a_.size() < 4)
        throw WeightError(WeightFault::TooFew, "weight datum requires n >= 4 entries");
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] <= 0)
            throw WeightError(WeightFault::NonPositive,
                              "weight a_" + std::to_string(i + 1) + " must be > 0");
        if (a_[i] > 1)
            throw WeightError(WeightFault::AboveOne,
                              "weight a_" + std::to_string(i + 1) + " must be <= 1");
        total_ += a_[i];
    }
    if (total_ < 2)
        throw WeightError(WeightFault::TotalBelowTwo,
                          "total weight " + to_string(total_) + " is below 2");
    regime_ = total_ > 2 ? Regime::Interior : Regime::Boundary;
}

Rational WeightDatum::weight_of(Subset I) const {
    Rational w = 0;
    for (std::uint32_t b = I.bits; b; b &= b - 1)
        w += a_[std::countr_zero(b)];
    return w;
}

bool WeightDatum::symmetric() const {
    return std::all_of(a_.begin(), a_.end(),
                       [&](const Rational& x) { return x == a_[0]; });
}

CanonicalSubset canonicalize(Subset I, const WeightDatum& A) {
    GroundSet g = A.ground();
    Subset Ic = complement(I, g);
    Rational wI = A.weight_of(I);
    Rational wIc = A.total() - wI;
    int kI = I.size();
    int kIc = g.n - kI;

    bool take_I;
    if (wI != wIc)
        take_I = wI < wIc;
    else if (kI != kIc)
        take_I = kI < kIc;
    else
        take_I = I.contains(1);

    if (take_I) return CanonicalSubset{I, std::move(wI), kI};
    return CanonicalSubset{Ic, std::move(wIc), kIc};
}

std::vector<CanonicalSubset> contracted_collection(const WeightDatum& A) {
    std::vector<CanonicalSubset> out;
    for_each_subset_pair(A.ground(), [&](Subset rep) {
        CanonicalSubset c = canonicalize(rep, A);
        if (c.weight <= 1) out.push_back(std::move(c));
    });
    std::sort(out.begin(), out.end(), [](const CanonicalSubset& a, const CanonicalSubset& b) {
        return a.members.bits < b.members.bits;
    });
    return out;
}

}  // namespace m0n
