#include "m0n/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "m0n/parallel.hpp"

namespace m0n {

namespace {

constexpr int kMaxCounterexamples = 5;

// Raw 64-bit generator; bounded draws use plain modulo so the sequence is
// the same on every standard library.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t next(std::uint64_t bound) { return gen() % bound; }
};

const std::array<const char*, 13> kTableTypes = {
    "(-,-,-,-,-,-,-)", "(-,-,-,-,-,-,+)", "(-,-,-,-,-,+,+)", "(-,-,-,-,+,+,+)",
    "(-,-,-,+,-,-,+)", "(-,-,-,+,-,+,+)", "(-,-,-,+,+,+,+)", "(-,-,+,+,-,+,+)",
    "(-,-,+,+,+,+,+)", "(-,+,+,+,+,+,+)", "(+,+,+,+,+,+,+)", "(-,-,-,-,-,-,*)",
    "(-,-,-,+,-,-,*)"};

}  // namespace

std::vector<WeightDatum> sample_weights(const CorpusSpec& spec) {
    if (spec.n < 4) throw std::invalid_argument("sampling requires n >= 4");
    if (spec.max_denominator < 2)
        throw std::invalid_argument("sampling requires denominator bound >= 2");
    Rng rng(spec.seed);
    std::vector<WeightDatum> out;
    out.reserve(spec.count);
    const long max_attempts = 100000L * std::max(spec.count, 1);
    long attempts = 0;
    while (static_cast<int>(out.size()) < spec.count) {
        if (++attempts > max_attempts)
            throw std::runtime_error("sampling: regime infeasible for given n and bound");
        std::uint64_t d = 2 + rng.next(spec.max_denominator - 1);
        std::vector<Rational> a;
        a.reserve(spec.n);
        const int free_count = spec.regime == Regime::Interior ? spec.n : spec.n - 1;
        Rational total = 0;
        for (int i = 0; i < free_count; ++i) {
            a.push_back(frac(static_cast<long>(1 + rng.next(d)), static_cast<long>(d)));
            total += a.back();
        }
        if (spec.regime == Regime::Interior) {
            if (total <= 2) continue;
        } else {
            Rational last = Rational(2) - total;
            if (last <= 0 || last > 1) continue;
            a.push_back(last);
        }
        out.emplace_back(std::move(a));
    }
    return out;
}

std::vector<WeightDatum> structured_cases(int n, Regime regime) {
    std::set<std::vector<Rational>> seen;
    std::vector<WeightDatum> out;
    auto push = [&](std::vector<Rational> a) {
        WeightDatum A(std::move(a));
        if (A.regime() != regime) return;
        if (seen.insert(A.entries()).second) out.push_back(std::move(A));
    };
    auto ones_padded = [&](std::vector<Rational> head) {
        while (static_cast<int>(head.size()) < n) head.emplace_back(1);
        return head;
    };
    if (regime == Regime::Interior) {
        push(ones_padded({}));  // the full space
        if (n >= 5) push(ones_padded({frac(2, 5), frac(2, 5)}));
        if (n >= 6) push(ones_padded({frac(3, 10), frac(3, 10), frac(3, 10)}));
        push(ones_padded({frac(1, 2), frac(1, 2)}));  // wall-exact: w_{1,2} = 1
        const int m = n / 2;
        for (int k = 1; k <= m - 2; ++k)  // chamber-top symmetric weights
            push(std::vector<Rational>(n, frac(1, m - k)));
        if (n >= 5) push(std::vector<Rational>(n, frac(1, 2)));
    } else {
        push(std::vector<Rational>(n, frac(2, n)));
        {
            std::vector<Rational> a{Rational(1)};
            a.resize(n, frac(1, n - 1));
            push(std::move(a));
        }
        {
            // Contains a block of weight exactly 1 (the w4 = 1 overlap).
            std::vector<Rational> a{frac(1, 2), frac(1, 2)};
            a.resize(n, frac(1, n - 2));
            push(std::move(a));
        }
        if (n >= 5) {
            // Realizes a curve with w1 + w4 = 1 (the other branch overlap).
            std::vector<Rational> a{frac(1, 2), frac(1, 2), frac(1, 2)};
            a.resize(n, frac(1, 2 * (n - 3)));
            push(std::move(a));
        }
    }
    return out;
}

std::string format_weights(const WeightDatum& A) {
    std::string out = "(";
    for (int i = 1; i <= A.n(); ++i) {
        out += to_string(A.weight(i));
        out += i < A.n() ? "," : ")";
    }
    return out;
}

std::string format_partition(const Partition4& p) {
    std::string out;
    for (const Subset& b : p.blocks) {
        out += "{";
        auto mem = b.members();
        for (size_t i = 0; i < mem.size(); ++i) {
            out += std::to_string(mem[i]);
            if (i + 1 < mem.size()) out += ",";
        }
        out += "}";
    }
    return out;
}

bool VerificationReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Fail;
    });
}

namespace {

class SuiteBuilder {
public:
    void touch(const std::string& name) {
        auto& c = get(name);
        if (c.status == CheckStatus::Skipped) c.status = CheckStatus::Pass;
    }

    void fail(const std::string& name, std::string counterexample) {
        auto& c = get(name);
        c.status = CheckStatus::Fail;
        ++c.failures;
        if (static_cast<int>(c.counterexamples.size()) < kMaxCounterexamples)
            c.counterexamples.push_back(std::move(counterexample));
    }

    void check(const std::string& name, bool ok, const std::string& counterexample) {
        touch(name);
        if (!ok) fail(name, counterexample);
    }

    std::vector<CheckResult> finish() {
        std::vector<CheckResult> out;
        out.reserve(checks_.size());
        for (auto& [name, c] : checks_) {
            c.name = name;
            out.push_back(std::move(c));
        }
        return out;  // map iteration: already sorted by name
    }

    SuiteBuilder() {
        for (const char* name :
             {"boundary-identity", "boundary-pair-count", "contracted-pairing-zero",
              "eq2-consistency", "eq4-jsum-vs-collapsed", "eq5-effectivity",
              "eq5-identity", "eq8-agreement", "picard-rank", "positivity",
              "psi-k2d-identity", "stirling-count", "symmetric-factorization",
              "table-agreement", "tie-robustness", "type-closure"})
            checks_[name] = CheckResult{};
    }

private:
    CheckResult& get(const std::string& name) { return checks_.at(name); }
    std::map<std::string, CheckResult> checks_;
};

// All block orderings compatible with w1 <= w2 <= w3 <= w4 (tied weights
// permuted freely). table_value must not depend on the choice.
std::vector<std::array<int, 4>> admissible_orderings(const VitalCurve& c) {
    std::array<int, 4> idx{0, 1, 2, 3};
    std::vector<std::array<int, 4>> out;
    do {
        bool ok = true;
        for (int j = 0; j + 1 < 4; ++j)
            if (c.block_weight[idx[j]] > c.block_weight[idx[j + 1]]) ok = false;
        if (ok) out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

bool has_weight_ties(const VitalCurve& c) {
    for (int j = 0; j + 1 < 4; ++j)
        if (c.block_weight[j] == c.block_weight[j + 1]) return true;
    return false;
}

struct CurveChunkOut {
    long curves = 0;
    long contracted = 0;
    std::set<std::string> types;
    std::vector<std::string> fail_table, fail_positivity, fail_contracted_zero,
        fail_tie, fail_closure;
    long n_table = 0, n_positivity = 0, n_contracted_zero = 0, n_tie = 0, n_closure = 0;
};

CurveChunkOut curve_chunk(const WeightDatum& A, const DivisorClass& pbpf,
                          const std::vector<Partition4>& parts, std::size_t begin,
                          std::size_t end) {
    CurveChunkOut out;
    const int n = A.n();
    const std::string wtag = "A=" + format_weights(A);
    for (std::size_t i = begin; i < end; ++i) {
        const Partition4& p = parts[i];
        VitalCurve c = make_curve(p, A);
        ++out.curves;
        const std::string tag = wtag + " partition=" + format_partition(p);
        Rational direct = pair(pbpf, p);
        if (is_contracted(c)) {
            ++out.contracted;
            if (direct != 0) {
                ++out.n_contracted_zero;
                if (out.fail_contracted_zero.size() < kMaxCounterexamples)
                    out.fail_contracted_zero.push_back(tag + " pairing=" + to_string(direct));
            }
            continue;
        }
        CurveType t = classify(c);
        out.types.insert(t.str());
        bool star_block = false;
        for (int j = 0; j < 4; ++j)
            if (t.symbols[j] == '*') star_block = true;
        std::vector<Rational> summands;
        try {
            summands = table_summands(t, c, n);
        } catch (const UnlistedTypeError&) {
            ++out.n_closure;
            if (out.fail_closure.size() < kMaxCounterexamples)
                out.fail_closure.push_back(tag + " type=" + t.str());
            continue;
        }
        if (star_block) {
            ++out.n_closure;
            if (out.fail_closure.size() < kMaxCounterexamples)
                out.fail_closure.push_back(tag + " type=" + t.str() +
                                           " (block symbol * on non-contracted curve)");
        }
        Rational tv = 0;
        for (const Rational& s : summands) tv += s;
        if (tv != direct) {
            ++out.n_table;
            if (out.fail_table.size() < kMaxCounterexamples)
                out.fail_table.push_back(tag + " type=" + t.str() + " table=" +
                                         to_string(tv) + " direct=" + to_string(direct));
        }
        bool summands_ok = !summands.empty() && summands.back() > 0;
        for (const Rational& s : summands)
            if (s < 0) summands_ok = false;
        if (tv <= 0 || !summands_ok) {
            ++out.n_positivity;
            if (out.fail_positivity.size() < kMaxCounterexamples)
                out.fail_positivity.push_back(tag + " type=" + t.str() +
                                              " value=" + to_string(tv));
        }
        if (has_weight_ties(c)) {
            for (const auto& ord : admissible_orderings(c)) {
                VitalCurve alt = c;
                for (int j = 0; j < 4; ++j) {
                    alt.ordered[j] = c.ordered[ord[j]];
                    alt.block_weight[j] = A.weight_of(alt.ordered[j]);
                    alt.block_size[j] = alt.ordered[j].size();
                }
                Rational av = table_value(classify(alt), alt, n);
                if (av != tv) {
                    ++out.n_tie;
                    if (out.fail_tie.size() < kMaxCounterexamples)
                        out.fail_tie.push_back(tag + " value=" + to_string(tv) +
                                               " reordered=" + to_string(av));
                    break;
                }
            }
        }
    }
    return out;
}

std::string class_mismatch(const GroundSet& g, const DivisorClass& lhs,
                           const DivisorClass& rhs) {
    for (const auto& [key, v] : lhs.coords()) {
        if (rhs.coeff(key) != v) {
            auto mem = key.members();
            std::string s = "I={";
            for (size_t i = 0; i < mem.size(); ++i)
                s += std::to_string(mem[i]) + (i + 1 < mem.size() ? "," : "");
            return s + "} lhs=" + to_string(v) + " rhs=" + to_string(rhs.coeff(key));
        }
    }
    for (const auto& [key, v] : rhs.coords())
        if (lhs.coeff(key) != v) {
            auto mem = key.members();
            std::string s = "I={";
            for (size_t i = 0; i < mem.size(); ++i)
                s += std::to_string(mem[i]) + (i + 1 < mem.size() ? "," : "");
            return s + "} lhs=0/1 rhs=" + to_string(v);
        }
    return "";
}

}  // namespace

VerificationReport run_suite(const std::vector<WeightDatum>& corpus, int jobs) {
    if (corpus.empty()) throw std::invalid_argument("run_suite: empty corpus");
    const int n = corpus.front().n();
    for (const WeightDatum& A : corpus)
        if (A.n() != n) throw std::invalid_argument("run_suite: mixed ground sets");

    GroundSet g(n);
    SuiteBuilder suite;
    VerificationReport report;
    report.n = n;

    // Per-n checks.
    auto parts = enumerate_partitions4(g);
    suite.check("stirling-count", parts.size() == stirling2(n, 4),
                "n=" + std::to_string(n) + " enumerated=" + std::to_string(parts.size()) +
                    " stirling=" + std::to_string(stirling2(n, 4)));
    {
        long pairs = 0, big = 0;
        for_each_subset_pair(g, [&](Subset rep) {
            ++pairs;
            if (pair_min_size(rep, g) >= 2) ++big;
        });
        long want_pairs = (1L << (n - 1)) - 1;
        long want_big = (1L << (n - 1)) - n - 1;
        suite.check("boundary-pair-count", pairs == want_pairs && big == want_big,
                    "n=" + std::to_string(n) + " pairs=" + std::to_string(pairs) +
                        " big=" + std::to_string(big));
    }
    {
        DivisorClass lhs = total_psi(g);
        DivisorClass rhs = canonical_class(g) + Rational(2) * total_boundary(g);
        suite.check("psi-k2d-identity", lhs == rhs, class_mismatch(g, lhs, rhs));
    }
    {
        suite.touch("symmetric-factorization");
        std::set<Rational> alphas;
        for (int q = 1; q <= 12; ++q)
            for (int p = 1; p <= q; ++p) {
                Rational alpha = frac(p, q);
                if (alpha * n > 2) alphas.insert(alpha);
            }
        DivisorClass K = canonical_class(g), D = total_boundary(g);
        for (const Rational& alpha : alphas) {
            WeightDatum A(std::vector<Rational>(n, alpha));
            Rational s = 2 * alpha / (1 + alpha);
            DivisorClass rhs = (1 + alpha) * (K + s * D);
            DivisorClass lhs = delta(A);
            if (!(lhs == rhs))
                suite.fail("symmetric-factorization",
                           "alpha=" + to_string(alpha) + " " + class_mismatch(g, lhs, rhs));
        }
    }
    if (n <= 8) {
        int r = pairing_matrix_rank(g);
        suite.check("picard-rank", r == expected_picard_rank(n),
                    "n=" + std::to_string(n) + " rank=" + std::to_string(r) +
                        " expected=" + std::to_string(expected_picard_rank(n)));
    }

    std::set<std::string> witnessed;

    for (const WeightDatum& A : corpus) {
        const std::string wtag = "A=" + format_weights(A);
        DivisorClass d = delta(A);
        {
            DivisorClass rhs = canonical_class(g);
            for (int i = 1; i <= n; ++i) rhs += A.weight(i) * psi_class(g, i);
            suite.check("eq2-consistency", d == rhs, wtag + " " + class_mismatch(g, d, rhs));
        }
        if (A.regime() == Regime::Interior) {
            ++report.interior_data;
            DivisorClass pbpf = pullback_pushforward(A);
            {
                DivisorClass oracle = pullback_pushforward_jsum(A);
                suite.check("eq4-jsum-vs-collapsed", pbpf == oracle,
                            wtag + " " + class_mismatch(g, pbpf, oracle));
            }
            DivisorClass diff = d - pbpf;
            DivisorClass closed = difference_closed_form(A);
            suite.check("eq5-identity", diff == closed,
                        wtag + " " + class_mismatch(g, diff, closed));
            {
                bool effective = true;
                std::string ce;
                std::set<Subset> ckeys;
                for (const CanonicalSubset& c : contracted_collection(A))
                    ckeys.insert(pair_key(c.members, g));
                for (const auto& [key, v] : closed.coords()) {
                    if (v < 0 || !ckeys.count(key)) {
                        effective = false;
                        ce = wtag + " coefficient " + to_string(v) + " at a ";
                        ce += ckeys.count(key) ? "negative coordinate" : "non-contracted coordinate";
                        break;
                    }
                }
                suite.check("eq5-effectivity", effective, ce);
            }
            // Curve loop, chunked; merged in chunk order.
            auto chunks = chunked_map<CurveChunkOut>(
                parts.size(), jobs, [&](std::size_t b, std::size_t e) {
                    return curve_chunk(A, pbpf, parts, b, e);
                });
            suite.touch("table-agreement");
            suite.touch("positivity");
            suite.touch("contracted-pairing-zero");
            suite.touch("tie-robustness");
            suite.touch("type-closure");
            auto drain = [&](const std::string& name, const std::vector<std::string>& ces,
                             long cnt) {
                for (long i = 0; i < cnt; ++i)
                    suite.fail(name, static_cast<std::size_t>(i) < ces.size()
                                         ? ces[i]
                                         : "(counterexample capped)");
            };
            for (const CurveChunkOut& c : chunks) {
                report.curves_checked += c.curves;
                report.contracted_curves += c.contracted;
                witnessed.insert(c.types.begin(), c.types.end());
                drain("table-agreement", c.fail_table, c.n_table);
                drain("positivity", c.fail_positivity, c.n_positivity);
                drain("contracted-pairing-zero", c.fail_contracted_zero, c.n_contracted_zero);
                drain("tie-robustness", c.fail_tie, c.n_tie);
                drain("type-closure", c.fail_closure, c.n_closure);
            }
        } else {
            ++report.boundary_data;
            DivisorClass dp = delta_prime(A);
            {
                DivisorClass diff = d - dp;
                DivisorClass closed = difference_closed_form(A);
                suite.check("boundary-identity", diff == closed,
                            wtag + " " + class_mismatch(g, diff, closed));
            }
            suite.touch("eq8-agreement");
            struct BOut {
                long curves = 0;
                std::vector<std::string> fails;
                long n_fail = 0;
            };
            auto chunks = chunked_map<BOut>(parts.size(), jobs,
                                            [&](std::size_t b, std::size_t e) {
                BOut out;
                for (std::size_t i = b; i < e; ++i) {
                    VitalCurve c = make_curve(parts[i], A);
                    ++out.curves;
                    Rational piecewise = delta_prime_pairing(c, A);
                    Rational direct = pair(dp, parts[i]);
                    if (piecewise != direct) {
                        ++out.n_fail;
                        if (out.fails.size() < kMaxCounterexamples)
                            out.fails.push_back(wtag + " partition=" +
                                                format_partition(parts[i]) + " piecewise=" +
                                                to_string(piecewise) +
                                                " direct=" + to_string(direct));
                    }
                }
                return out;
            });
            for (const auto& c : chunks) {
                report.curves_checked += c.curves;
                for (long i = 0; i < c.n_fail; ++i)
                    suite.fail("eq8-agreement",
                               static_cast<std::size_t>(i) < c.fails.size()
                                   ? c.fails[i]
                                   : "(counterexample capped)");
            }
        }
    }

    report.types_witnessed.assign(witnessed.begin(), witnessed.end());
    for (const char* t : kTableTypes)
        if (!witnessed.count(t)) report.types_unwitnessed.push_back(t);
    report.checks = suite.finish();
    return report;
}

ModelDescriptor model_descriptor(const WeightDatum& A) {
    ModelDescriptor out;
    out.regime = A.regime();
    GroundSet g = A.ground();
    const int n = g.n;

    if (A.regime() == Regime::Interior) {
        for (std::uint32_t bits = 1; bits < g.full_mask(); ++bits) {
            Subset I(bits);
            if (I.size() < 2) continue;
            if (A.weight_of(I) <= 1) out.collisions.push_back(I);
        }
        out.contracted_divisors = static_cast<long>(out.collisions.size());
        bool ok = true;
        DivisorClass pbpf = pullback_pushforward(A);
        for (const Partition4& p : enumerate_partitions4(g)) {
            VitalCurve c = make_curve(p, A);
            Rational v = pair(pbpf, p);
            if (is_contracted(c)) {
                ++out.contracted_curves;
                if (v != 0) ok = false;
            } else if (v <= 0) {
                ok = false;
            }
        }
        out.verified_ample = ok;
    } else {
        for (std::uint32_t bits = 1; bits < g.full_mask(); ++bits) {
            Subset I(bits);
            if (A.weight_of(I) == 1) out.walls.push_back(I);
        }
        out.atypical = !out.walls.empty();
    }

    if (A.symmetric()) {
        SymmetricInfo info;
        info.alpha = A.weight(1);
        info.beta = 2 * info.alpha / (1 + info.alpha);
        info.m = n / 2;
        const int m = info.m;
        for (int k = 1; k <= m - 2; ++k) {
            if (frac(2, m - k + 2) < info.beta && info.beta <= frac(2, m - k + 1)) {
                info.chamber_k = k;
                break;
            }
        }
        if (!info.chamber_k && frac(2, n - 1) < info.beta && info.beta <= frac(2, m + 1))
            info.git_range = true;
        out.symmetric = info;
    }
    return out;
}

}  // namespace m0n
