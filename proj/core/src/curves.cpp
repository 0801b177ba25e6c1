#include "m0n/curves.hpp"

#include <algorithm>
#include <map>

namespace m0n {

VitalCurve make_curve(const Partition4& p, const WeightDatum& A) {
    VitalCurve c;
    c.partition = p;
    c.total_weight = A.total();

    std::array<int, 4> order{0, 1, 2, 3};
    std::array<Rational, 4> w;
    for (int j = 0; j < 4; ++j) w[j] = A.weight_of(p.blocks[j]);
    // Weight-sorted; ties broken by block minimum element ascending.
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (w[x] != w[y]) return w[x] < w[y];
        return p.blocks[x].min_element() < p.blocks[y].min_element();
    });
    for (int j = 0; j < 4; ++j) {
        c.ordered[j] = p.blocks[order[j]];
        c.block_weight[j] = w[order[j]];
        c.block_size[j] = c.ordered[j].size();
    }
    return c;
}

std::string CurveType::str() const {
    std::string out = "(";
    for (int i = 0; i < 7; ++i) {
        out += symbols[i];
        out += (i < 6) ? "," : ")";
    }
    return out;
}

int pair_boundary(Subset I, const Partition4& c, const GroundSet& g) {
    if (I.empty() || I.bits == g.full_mask())
        throw std::invalid_argument("pairing requires a nonempty proper subset");
    if ((I.bits & ~g.full_mask()) != 0)
        throw std::invalid_argument("ground set mismatch");
    if (pair_min_size(I, g) <= 1) return 0;  // D_I = 0 convention
    Subset key = pair_key(I, g);
    for (const Subset& b : c.blocks)
        if (pair_key(b, g) == key) return -1;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            if (pair_key(c.blocks[x] | c.blocks[y], g) == key) return 1;
    return 0;
}

Rational pair(const DivisorClass& d, const Partition4& c) {
    const GroundSet& g = d.ground();
    if ((c.blocks[0] | c.blocks[1] | c.blocks[2] | c.blocks[3]).bits != g.full_mask())
        throw std::invalid_argument("ground set mismatch");
    // Only blocks and 2-block unions pair nonzero; blocks[0] contains 1,
    // so the three unions with it already cover all unions up to complement.
    Rational v = 0;
    for (const Subset& b : c.blocks) v -= d.coeff(b);
    for (int j = 1; j < 4; ++j) v += d.coeff(c.blocks[0] | c.blocks[j]);
    return v;
}

bool is_contracted(const VitalCurve& c) {
    return c.total_weight - c.block_weight[3] <= 1;
}

namespace {

char symbol_for(const Rational& x, const Rational& w) {
    if (x <= 1) return '-';
    if (x >= w - 1) return '*';
    return '+';
}

}  // namespace

CurveType classify(const VitalCurve& c) {
    if (is_contracted(c))
        throw std::domain_error("classify: contracted curves have no type");
    CurveType t{};
    const Rational& w = c.total_weight;
    for (int j = 0; j < 4; ++j) t.symbols[j] = symbol_for(c.block_weight[j], w);
    for (int j = 1; j < 4; ++j)
        t.symbols[3 + j] = symbol_for(c.block_weight[0] + c.block_weight[j], w);
    return t;
}

std::vector<Rational> table_summands(const CurveType& t, const VitalCurve& c, int n) {
    const Rational& w1 = c.block_weight[0];
    const Rational& w2 = c.block_weight[1];
    const Rational& w3 = c.block_weight[2];
    const Rational& w4 = c.block_weight[3];
    const Rational& w = c.total_weight;
    const int T1 = c.block_size[0], T2 = c.block_size[1];
    const int T3 = c.block_size[2], T4 = c.block_size[3];
    const std::string key(t.symbols.begin(), t.symbols.end());

    if (key == "-------")
        return {Rational(n - 4) * w1, Rational(T1) * (w - 2)};
    if (key == "------+")
        return {Rational(T1 - 1) * (w1 + w2 + w3 - 1), Rational(T2 + T3 - 2) * w1,
                Rational(T4 - 1) * (1 - w4), w - 2};
    if (key == "-----++")
        return {Rational(T2 - 1) * w1, Rational(T1 - 1) * w2,
                Rational(T3 - 1) * (1 - w3), Rational(T4 - 1) * (1 - w4), w - 2};
    if (key == "----+++")
        return {Rational(T1 - 1) * (1 - w1), Rational(T2 - 1) * (1 - w2),
                Rational(T3 - 1) * (1 - w3), Rational(T4 - 1) * (1 - w4), w - 2};
    if (key == "---+--+")
        return {Rational(T2 + T3 - 2) * w1, Rational(T1) * (w1 + w2 + w3 - 1)};
    if (key == "---+-++")
        return {Rational(T2 - 1) * w1, Rational(T1 - 1) * w2,
                Rational(T3 - 1) * (1 - w3), w1 + w2 + w3 - 1};
    if (key == "---++++")
        return {Rational(T1 - 1) * (1 - w1), Rational(T2 - 1) * (1 - w2),
                Rational(T3 - 1) * (1 - w3), w1 + w2 + w3 - 1};
    if (key == "--++-++")
        return {Rational(T2) * w1, Rational(T1) * w2};
    if (key == "--+++++")
        return {Rational(T1 - 1) * (1 - w1), Rational(T2 - 1) * (1 - w2), w1 + w2};
    if (key == "-++++++")
        return {Rational(T1 - 1) * (1 - w1), w1 + 1};
    if (key == "+++++++")
        return {Rational(2)};
    if (key == "------*")
        return {Rational(T1 + T2 + T3 - 3) * (w1 + w2 + w3 - 1),
                Rational(T4 - 1) * (1 - w4), w - 2};
    if (key == "---+--*")
        return {Rational(T1 + T2 + T3 - 2) * (w1 + w2 + w3 - 1)};
    throw UnlistedTypeError(t);
}

Rational table_value(const CurveType& t, const VitalCurve& c, int n) {
    Rational v = 0;
    for (const Rational& s : table_summands(t, c, n)) v += s;
    return v;
}

Rational delta_prime_pairing(const VitalCurve& c, const WeightDatum& A) {
    if (A.regime() != Regime::Boundary)
        throw std::domain_error("delta_prime_pairing requires total weight = 2");
    const int n = A.n();
    const Rational& w1 = c.block_weight[0];
    const Rational& w4 = c.block_weight[3];
    if (w4 >= 1) return Rational(0);
    if (w1 + w4 >= 1) return Rational(n - 4) * (1 - w4);
    return Rational(n - 4) * w1;
}

std::vector<CurveEntry> enumerate_curves(const WeightDatum& A) {
    std::vector<CurveEntry> out;
    auto parts = enumerate_partitions4(A.ground());
    out.reserve(parts.size());
    const bool interior = A.regime() == Regime::Interior;
    for (const Partition4& p : parts) {
        CurveEntry e;
        e.curve = make_curve(p, A);
        if (interior) {
            e.contracted = is_contracted(e.curve);
            if (!e.contracted) e.type = classify(e.curve);
        }
        out.push_back(std::move(e));
    }
    return out;
}

long expected_picard_rank(int n) {
    return (1L << (n - 1)) - n * (n - 1) / 2 - 1;
}

int pairing_matrix_rank(const GroundSet& g) {
    // Columns: boundary pairs with both sides of size >= 2.
    std::map<Subset, int> col_of;
    for_each_subset_pair(g, [&](Subset rep) {
        if (pair_min_size(rep, g) <= 1) return;
        int idx = static_cast<int>(col_of.size());
        col_of.emplace(rep, idx);
    });
    const int ncols = static_cast<int>(col_of.size());

    // Echelon basis: pivot rows normalized to 1 at their pivot column,
    // kept sorted by pivot column. Curve rows have at most 7 nonzeros.
    std::vector<std::pair<int, std::vector<Rational>>> pivots;
    int rank = 0;
    std::vector<Rational> row(ncols);

    for (const Partition4& p : enumerate_partitions4(g)) {
        std::fill(row.begin(), row.end(), Rational(0));
        auto put = [&](Subset I, int sign) {
            if (pair_min_size(I, g) <= 1) return;
            row[col_of.at(pair_key(I, g))] += sign;
        };
        for (const Subset& b : p.blocks) put(b, -1);
        for (int j = 1; j < 4; ++j) put(p.blocks[0] | p.blocks[j], 1);
        for (auto& [pc, prow] : pivots) {
            if (row[pc] == 0) continue;
            Rational f = row[pc];
            for (int j = pc; j < ncols; ++j)
                if (prow[j] != 0) row[j] -= f * prow[j];
        }
        int lead = -1;
        for (int j = 0; j < ncols; ++j)
            if (row[j] != 0) {
                lead = j;
                break;
            }
        if (lead < 0) continue;
        Rational inv = 1 / row[lead];
        for (int j = lead; j < ncols; ++j)
            if (row[j] != 0) row[j] *= inv;
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead,
                                    [](const auto& a, int b) { return a.first < b; });
        pivots.insert(pos, {lead, row});
        if (++rank == ncols) break;
    }
    return rank;
}

}  // namespace m0n
