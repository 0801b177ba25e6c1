#ifndef M0N_VERIFY_HPP
#define M0N_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "m0n/curves.hpp"
#include "m0n/weights.hpp"

namespace m0n {

struct CorpusSpec {
    int n = 5;
    Regime regime = Regime::Interior;
    int count = 100;
    std::uint64_t seed = 0;
    int max_denominator = 30;
};

// Seeded rejection sampling of weight data: a_i = k_i/d with a shared
// denominator d <= max_denominator. Interior keeps samples with total > 2;
// Boundary solves the last weight from the first n-1 and rejects when it
// leaves (0, 1]. Deterministic given (spec.seed, spec); the generator is
// used raw (no std distributions) so sequences do not depend on the
// standard library implementation.
std::vector<WeightDatum> sample_weights(const CorpusSpec& spec);

// Hand-picked weight data that hit equality branches random sampling rarely
// finds: all-ones, wall-exact collisions, symmetric chamber values, and
// boundary data realizing the Eq-8-style branch overlaps.
std::vector<WeightDatum> structured_cases(int n, Regime regime);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    long failures = 0;
    std::vector<std::string> counterexamples;  // capped, fully reproducible
};

struct VerificationReport {
    int n = 0;
    long interior_data = 0;
    long boundary_data = 0;
    long curves_checked = 0;
    long contracted_curves = 0;
    std::vector<std::string> types_witnessed;    // sorted
    std::vector<std::string> types_unwitnessed;  // informational only
    std::vector<CheckResult> checks;             // sorted by name

    bool all_passed() const;
};

// Runs every per-datum and per-n check over the corpus. Failures become
// report entries carrying counterexamples; nothing throws. The Picard-rank
// check runs only for n <= 8 (cost), reported Skipped above that. Output is
// identical for any job count.
VerificationReport run_suite(const std::vector<WeightDatum>& corpus, int jobs = 1);

struct SymmetricInfo {
    Rational alpha;
    Rational beta;               // 2a/(1+a)
    int m = 0;                   // floor(n/2)
    std::optional<int> chamber_k;  // 2/(m-k+2) < beta <= 2/(m-k+1)
    bool git_range = false;        // 2/(n-1) < beta <= 2/(m+1)
};

// Which birational model the weight datum selects.
struct ModelDescriptor {
    Regime regime = Regime::Interior;
    // Interior: Hassett space data.
    std::vector<Subset> collisions;  // I with w_I <= 1 and |I| >= 2
    long contracted_divisors = 0;
    long contracted_curves = 0;
    bool verified_ample = false;  // positivity + contracted-zero, conditional on the F-conjecture
    std::optional<SymmetricInfo> symmetric;
    // Boundary: GIT linearization data.
    std::vector<Subset> walls;  // nonempty proper I with w_I = 1
    bool atypical = false;
};

ModelDescriptor model_descriptor(const WeightDatum& A);

std::string format_weights(const WeightDatum& A);
std::string format_partition(const Partition4& p);

}  // namespace m0n

#endif
