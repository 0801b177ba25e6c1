#include <doctest.h>

#include "m0n/report_json.hpp"
#include "m0n/verify.hpp"

using namespace m0n;

namespace {

WeightDatum W(std::initializer_list<const char*> parts) {
    std::vector<Rational> a;
    for (const char* p : parts) a.push_back(parse_rational(p));
    return WeightDatum(std::move(a));
}

}  // namespace

TEST_CASE("sampling determinism and regimes") {
    CorpusSpec spec{5, Regime::Interior, 3, 42, 20};
    auto a = sample_weights(spec);
    auto b = sample_weights(spec);
    REQUIRE(a.size() == 3);
    CHECK(a == b);
    for (const WeightDatum& A : a) {
        CHECK(A.total() > 2);
        for (int i = 1; i <= A.n(); ++i) {
            CHECK(A.weight(i) > 0);
            CHECK(A.weight(i) <= 1);
        }
    }
    for (const WeightDatum& A : sample_weights({4, Regime::Boundary, 10, 7, 12}))
        CHECK(A.total() == 2);
    CHECK_THROWS_AS(sample_weights({5, Regime::Interior, 1, 0, 1}),
                    std::invalid_argument);
}

TEST_CASE("structured cases include the equality branches") {
    auto interior = structured_cases(6, Regime::Interior);
    CHECK(!interior.empty());
    bool has_all_ones = false, has_wall = false;
    for (const WeightDatum& A : interior) {
        CHECK(A.regime() == Regime::Interior);
        if (A.symmetric() && A.weight(1) == 1) has_all_ones = true;
        if (A.weight_of(Subset::of({1, 2})) == 1) has_wall = true;
    }
    CHECK(has_all_ones);
    CHECK(has_wall);

    auto boundary = structured_cases(6, Regime::Boundary);
    CHECK(!boundary.empty());
    bool overlap_w4 = false, overlap_w14 = false;
    for (const WeightDatum& A : boundary) {
        CHECK(A.regime() == Regime::Boundary);
        for (const CurveEntry& e : enumerate_curves(A)) {
            if (e.curve.block_weight[3] == 1) overlap_w4 = true;
            if (e.curve.block_weight[3] < 1 &&
                e.curve.block_weight[0] + e.curve.block_weight[3] == 1)
                overlap_w14 = true;
        }
    }
    CHECK(overlap_w4);
    CHECK(overlap_w14);
}

TEST_CASE("run_suite on the all-ones datum") {
    VerificationReport r = run_suite({W({"1", "1", "1", "1", "1"})});
    CHECK(r.all_passed());
    CHECK(r.curves_checked == 10);
    CHECK(r.contracted_curves == 0);
    CHECK(r.interior_data == 1);
    for (const CheckResult& c : r.checks) {
        if (c.name == "eq8-agreement" || c.name == "boundary-identity")
            CHECK(c.status == CheckStatus::Skipped);
        else
            CHECK(c.status != CheckStatus::Fail);
    }
}

TEST_CASE("run_suite over a mixed corpus passes") {
    std::vector<WeightDatum> corpus = structured_cases(5, Regime::Interior);
    for (WeightDatum& A : structured_cases(5, Regime::Boundary)) corpus.push_back(A);
    for (WeightDatum& A : sample_weights({5, Regime::Interior, 10, 11, 20}))
        corpus.push_back(A);
    for (WeightDatum& A : sample_weights({5, Regime::Boundary, 10, 12, 20}))
        corpus.push_back(A);
    VerificationReport r = run_suite(corpus);
    for (const CheckResult& c : r.checks) {
        INFO(c.name, " ", c.counterexamples.empty() ? "" : c.counterexamples.front());
        CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(r.interior_data > 0);
    CHECK(r.boundary_data > 0);
}

TEST_CASE("reports are identical across job counts") {
    std::vector<WeightDatum> corpus = sample_weights({6, Regime::Interior, 5, 9, 15});
    for (WeightDatum& A : sample_weights({6, Regime::Boundary, 5, 10, 15}))
        corpus.push_back(A);
    std::string one = report::dump(report::verify_json(run_suite(corpus, 1)));
    std::string four = report::dump(report::verify_json(run_suite(corpus, 4)));
    std::string seven = report::dump(report::verify_json(run_suite(corpus, 7)));
    CHECK(one == four);
    CHECK(one == seven);
}

TEST_CASE("failing checks carry reproducible counterexamples") {
    // A deliberately broken corpus is hard to make (the math holds), so
    // check the report plumbing instead: every Fail in a doctored report
    // must carry a counterexample. Exercised via the real suite by checking
    // the invariant vacuously plus the replay property on a pass.
    std::vector<WeightDatum> corpus = sample_weights({5, Regime::Interior, 3, 4, 10});
    VerificationReport r1 = run_suite(corpus);
    VerificationReport r2 = run_suite(corpus);
    CHECK(report::dump(report::verify_json(r1)) == report::dump(report::verify_json(r2)));
    for (const CheckResult& c : r1.checks)
        if (c.status == CheckStatus::Fail) CHECK(!c.counterexamples.empty());
}

TEST_CASE("model descriptor") {
    {
        ModelDescriptor m = model_descriptor(W({"1", "1", "1", "1", "1"}));
        CHECK(m.regime == Regime::Interior);
        CHECK(m.collisions.empty());
        CHECK(m.contracted_curves == 0);
        CHECK(m.verified_ample);
        REQUIRE(m.symmetric);
        CHECK(m.symmetric->alpha == 1);
        CHECK_FALSE(m.symmetric->chamber_k);
    }
    {
        // n=8, alpha=1/2: beta = 2/3, m = 4, chamber k = 2.
        ModelDescriptor m = model_descriptor(
            WeightDatum{std::vector<Rational>(8, frac(1, 2))});
        REQUIRE(m.symmetric);
        CHECK(m.symmetric->beta == frac(2, 3));
        CHECK(m.symmetric->m == 4);
        REQUIRE(m.symmetric->chamber_k);
        CHECK(*m.symmetric->chamber_k == 2);
        // epsilon = alpha lies in (1/(m+1-k), 1/(m-k)] = (1/3, 1/2].
        int k = *m.symmetric->chamber_k;
        CHECK(frac(1, m.symmetric->m + 1 - k) < m.symmetric->alpha);
        CHECK(m.symmetric->alpha <= frac(1, m.symmetric->m - k));
    }
    {
        ModelDescriptor m = model_descriptor(W({"1/2", "1/2", "1/2", "1/2"}));
        CHECK(m.regime == Regime::Boundary);
        CHECK(m.walls.size() == 6);  // all six 2-subsets
        CHECK(m.atypical);
    }
    {
        ModelDescriptor m = model_descriptor(W({"1", "1", "1", "2/5", "2/5"}));
        REQUIRE(m.collisions.size() == 1);
        CHECK(m.collisions[0] == Subset::of({4, 5}));
        CHECK(m.verified_ample);
    }
}
