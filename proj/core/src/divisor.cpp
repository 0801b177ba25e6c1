#include "m0n/divisor.hpp"

#include <stdexcept>

namespace m0n {

namespace {

void require_interior(const WeightDatum& A, const char* op) {
    if (A.regime() != Regime::Interior)
        throw std::domain_error(std::string(op) + " requires total weight > 2");
}

void require_boundary(const WeightDatum& A, const char* op) {
    if (A.regime() != Regime::Boundary)
        throw std::domain_error(std::string(op) + " requires total weight = 2");
}

// Coefficient of D_I in delta; symmetric under I <-> I^c.
Rational delta_coeff(int n, int k, const Rational& wI, const Rational& wIc) {
    Rational c = frac(k * (n - k), n - 1) - 2;
    c += frac((n - k) * (n - k - 1), (n - 1) * (n - 2)) * wI;
    c += frac(k * (k - 1), (n - 1) * (n - 2)) * wIc;
    return c;
}

}  // namespace

Rational DivisorClass::coeff(Subset I) const {
    auto it = coeffs_.find(pair_key(I, g_));
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void DivisorClass::add(Subset I, const Rational& v) {
    if (pair_min_size(I, g_) <= 1 || v == 0) return;
    Subset key = pair_key(I, g_);
    Rational& c = coeffs_[key];
    c += v;
    if (c == 0) coeffs_.erase(key);
}

bool DivisorClass::is_zero() const { return coeffs_.empty(); }

std::vector<Subset> DivisorClass::support() const {
    std::vector<Subset> out;
    out.reserve(coeffs_.size());
    for (const auto& [key, v] : coeffs_) out.push_back(key);
    return out;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (g_.n != o.g_.n) throw std::invalid_argument("ground set mismatch");
    for (const auto& [key, v] : o.coeffs_) add(key, v);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (g_.n != o.g_.n) throw std::invalid_argument("ground set mismatch");
    for (const auto& [key, v] : o.coeffs_) add(key, -v);
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, v] : coeffs_) v *= s;
    return *this;
}

bool DivisorClass::operator==(const DivisorClass& o) const {
    return g_.n == o.g_.n && coeffs_ == o.coeffs_;
}

DivisorClass psi_class(const GroundSet& g, int i) {
    if (i < 1 || i > g.n) throw std::out_of_range("marked point index out of range");
    const int n = g.n;
    DivisorClass out(g);
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        int k = rep.size();
        if (!rep.contains(i)) k = n - k;  // view from the side containing i
        out.add(rep, frac((n - k) * (n - k - 1), (n - 1) * (n - 2)));
    });
    return out;
}

DivisorClass canonical_class(const GroundSet& g) {
    const int n = g.n;
    DivisorClass out(g);
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        int k = rep.size();
        out.add(rep, frac(k * (n - k), n - 1) - 2);
    });
    return out;
}

DivisorClass total_boundary(const GroundSet& g) {
    DivisorClass out(g);
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        out.add(rep, 1);
    });
    return out;
}

DivisorClass total_psi(const GroundSet& g) {
    const int n = g.n;
    DivisorClass out(g);
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        int k = rep.size();
        out.add(rep, frac(k * (n - k), n - 1));
    });
    return out;
}

DivisorClass delta(const WeightDatum& A) {
    GroundSet g = A.ground();
    const int n = g.n;
    DivisorClass out(g);
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        Rational wI = A.weight_of(rep);
        out.add(rep, delta_coeff(n, rep.size(), wI, A.total() - wI));
    });
    return out;
}

HassettClass pushforward(const DivisorClass& d, const WeightDatum& A) {
    require_interior(A, "pushforward");
    if (d.ground().n != A.n()) throw std::invalid_argument("ground set mismatch");
    HassettClass out{d, contracted_collection(A)};
    for (const CanonicalSubset& c : out.contracted) {
        Rational cur = out.cls.coeff(c.members);
        if (cur != 0) out.cls.add(c.members, -cur);
    }
    return out;
}

DivisorClass pullback_pushforward(const WeightDatum& A) {
    require_interior(A, "pullback_pushforward");
    GroundSet g = A.ground();
    const int n = g.n;
    DivisorClass out = delta(A);
    for (const CanonicalSubset& c : contracted_collection(A)) {
        if (pair_min_size(c.members, g) <= 1) continue;
        const int k = c.size;
        Rational wIc = A.total() - c.weight;
        // Collapsed coefficient on I in C.
        Rational v = frac(k * (k - 1) / 2, 1) * (frac(2 * (n - 2), n - 1) - 2);
        v += frac((n - 3) * (k - 1), n - 1) * c.weight;
        v += frac((k - 1) * (k - 2), (n - 1) * (n - 2)) * c.weight;
        v += frac(k * (k - 1), (n - 1) * (n - 2)) * wIc;
        Rational cur = out.coeff(c.members);
        out.add(c.members, v - cur);
    }
    return out;
}

DivisorClass pullback_pushforward_jsum(const WeightDatum& A) {
    require_interior(A, "pullback_pushforward");
    GroundSet g = A.ground();
    const int n = g.n;
    DivisorClass out = delta(A);
    for (const CanonicalSubset& c : contracted_collection(A)) {
        if (pair_min_size(c.members, g) <= 1) continue;
        // Sum over 2-subsets J of I of the delta-style coefficient at J.
        Rational v = 0;
        auto mem = c.members.members();
        for (size_t x = 0; x < mem.size(); ++x) {
            for (size_t y = x + 1; y < mem.size(); ++y) {
                Rational wJ = A.weight(mem[x]) + A.weight(mem[y]);
                v += frac(2 * (n - 2), n - 1) - 2;
                v += frac((n - 2) * (n - 3), (n - 1) * (n - 2)) * wJ;
                v += frac(2, (n - 1) * (n - 2)) * (A.total() - wJ);
            }
        }
        Rational cur = out.coeff(c.members);
        out.add(c.members, v - cur);
    }
    return out;
}

DivisorClass difference_closed_form(const WeightDatum& A) {
    GroundSet g = A.ground();
    DivisorClass out(g);
    for (const CanonicalSubset& c : contracted_collection(A)) {
        if (pair_min_size(c.members, g) <= 1) continue;
        out.add(c.members, Rational(c.size - 2) * (Rational(1) - c.weight));
    }
    return out;
}

DivisorClass delta_prime(const WeightDatum& A) {
    require_boundary(A, "delta_prime");
    GroundSet g = A.ground();
    const int n = g.n;
    DivisorClass out(g);
    if (n == 4) return out;  // factor (n-4) kills everything
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        // The coefficient is not complement-symmetric; it is evaluated at
        // the canonical (lighter-side) representative.
        CanonicalSubset c = canonicalize(rep, A);
        const int k = c.size;
        Rational v = frac(-k * (k - 1), (n - 1) * (n - 2)) + frac(k - 1, n - 2) * c.weight;
        out.add(rep, Rational(n - 4) * v);
    });
    return out;
}

}  // namespace m0n
