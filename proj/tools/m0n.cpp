// m0n: exact-arithmetic computations of divisor classes, reduction-morphism
// pushforwards/pullbacks, and vital-curve intersection numbers on the moduli
// space of n-pointed stable rational curves.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "m0n/report_json.hpp"

using namespace m0n;
using nlohmann::json;

namespace {

struct Options {
    std::string weights_text;
    int n = 0;
    std::string format = "json";
    std::uint64_t seed = 0;
    int samples = 100;
    int max_denominator = 30;
    int jobs = 1;
    std::string out_path;
    bool force = false;
    bool table_check = false;
    int grid = 0;
};

WeightDatum parse_weights(const std::string& text) {
    std::vector<Rational> a;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed weight list: empty entry");
        a.push_back(parse_rational(tok));
    }
    return WeightDatum(std::move(a));
}

void write_output(const Options& opt, const std::string& bytes) {
    if (opt.out_path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
    f << bytes;
}

void guard_curve_enumeration(int n, bool force) {
    if (n > 14 && !force) {
        std::ostringstream msg;
        msg << "n=" << n << " enumerates " << stirling2(n, 4)
            << " vital curves; pass --force to proceed";
        throw std::invalid_argument(msg.str());
    }
}

json base_doc(const std::string& command) {
    json doc;
    doc["schema_version"] = report::kSchemaVersion;
    doc["command"] = command;
    return doc;
}

const char* regime_str(Regime r) {
    return r == Regime::Interior ? "interior" : "boundary";
}

int run_class_command(const std::string& name, const Options& opt) {
    WeightDatum A = parse_weights(opt.weights_text);
    if (opt.n != 0 && opt.n != A.n())
        throw std::invalid_argument("--n disagrees with the number of weights");

    DivisorClass cls(A.ground());
    if (name == "delta") {
        cls = delta(A);
    } else if (name == "pushforward") {
        cls = pushforward(delta(A), A).cls;
    } else if (name == "pullback") {
        cls = pullback_pushforward(A);
    } else if (name == "difference") {
        if (A.regime() != Regime::Interior)
            throw std::invalid_argument("difference requires total weight > 2");
        cls = difference_closed_form(A);
    } else {  // delta-prime
        cls = delta_prime(A);
    }

    if (opt.format == "csv") {
        write_output(opt, report::class_csv(cls, &A));
    } else {
        json doc = base_doc(name);
        doc["n"] = A.n();
        doc["weights"] = report::weights_json(A);
        doc["regime"] = regime_str(A.regime());
        doc["coefficients"] = report::class_json(cls, &A);
        write_output(opt, report::dump(doc));
    }
    return 0;
}

int run_curves(const Options& opt) {
    WeightDatum A = parse_weights(opt.weights_text);
    guard_curve_enumeration(A.n(), opt.force);
    auto entries = enumerate_curves(A);
    std::optional<DivisorClass> pbpf;
    if (opt.table_check) {
        if (A.regime() != Regime::Interior)
            throw std::invalid_argument("--table-check requires total weight > 2");
        pbpf = pullback_pushforward(A);
    }
    const DivisorClass* p = pbpf ? &*pbpf : nullptr;
    if (opt.format == "csv") {
        write_output(opt, report::curve_entries_csv(entries, A, opt.table_check, p));
    } else {
        json doc = base_doc("curves");
        doc["n"] = A.n();
        doc["weights"] = report::weights_json(A);
        doc["regime"] = regime_str(A.regime());
        doc["curves"] = report::curve_entries_json(entries, A, opt.table_check, p);
        write_output(opt, report::dump(doc));
    }
    return 0;
}

int run_verify(const Options& opt) {
    if (opt.n < 4) throw std::invalid_argument("verify requires --n >= 4");
    guard_curve_enumeration(opt.n, opt.force);
    std::vector<WeightDatum> corpus = structured_cases(opt.n, Regime::Interior);
    for (WeightDatum& A : structured_cases(opt.n, Regime::Boundary))
        corpus.push_back(std::move(A));
    CorpusSpec spec{opt.n, Regime::Interior, opt.samples, opt.seed, opt.max_denominator};
    for (WeightDatum& A : sample_weights(spec)) corpus.push_back(std::move(A));
    spec.regime = Regime::Boundary;
    spec.seed = opt.seed + 1;
    for (WeightDatum& A : sample_weights(spec)) corpus.push_back(std::move(A));

    VerificationReport r = run_suite(corpus, opt.jobs);

    json doc = base_doc("verify");
    doc["n"] = opt.n;
    doc["seed"] = opt.seed;
    doc["samples"] = opt.samples;
    doc["max_denominator"] = opt.max_denominator;
    doc.update(report::verify_json(r));
    write_output(opt, report::dump(doc));
    for (const CheckResult& c : r.checks)
        std::cerr << c.name << ": "
                  << (c.status == CheckStatus::Pass
                          ? "pass"
                          : (c.status == CheckStatus::Fail ? "FAIL" : "skipped"))
                  << "\n";
    return r.all_passed() ? 0 : 1;
}

int run_model(const Options& opt) {
    WeightDatum A = parse_weights(opt.weights_text);
    guard_curve_enumeration(A.n(), opt.force);
    ModelDescriptor m = model_descriptor(A);
    json doc = base_doc("model");
    doc.update(report::model_json(m, A));
    write_output(opt, report::dump(doc));
    return 0;
}

int run_rank(const Options& opt) {
    if (opt.n < 4) throw std::invalid_argument("rank requires --n >= 4");
    guard_curve_enumeration(opt.n, opt.force);
    int r = pairing_matrix_rank(GroundSet(opt.n));
    long expected = expected_picard_rank(opt.n);
    json doc = base_doc("rank");
    doc["n"] = opt.n;
    doc["rank"] = r;
    doc["expected"] = expected;
    doc["match"] = r == expected;
    write_output(opt, report::dump(doc));
    return r == expected ? 0 : 1;
}

int run_scan(const Options& opt) {
    if (opt.n < 4) throw std::invalid_argument("scan requires --n >= 4");
    guard_curve_enumeration(opt.n, opt.force);
    std::vector<WeightDatum> data;
    if (opt.grid > 0) {
        // Symmetric slice: alpha = k/grid for every k giving a valid datum.
        for (int k = 1; k <= opt.grid; ++k) {
            Rational alpha = frac(k, opt.grid);
            if (alpha * opt.n < 2) continue;
            data.emplace_back(std::vector<Rational>(opt.n, alpha));
        }
    } else {
        CorpusSpec spec{opt.n, Regime::Interior, opt.samples, opt.seed, opt.max_denominator};
        data = sample_weights(spec);
    }

    json entries = json::array();
    std::map<std::string, long> model_counts;
    long wall_hits = 0;
    for (const WeightDatum& A : data) {
        ModelDescriptor m = model_descriptor(A);
        json e = report::model_json(m, A);
        std::string fingerprint;
        if (m.regime == Regime::Interior) {
            for (Subset I : m.collisions) fingerprint += report::subset_key(I) + ";";
            bool wall = false;
            GroundSet g = A.ground();
            for (std::uint32_t bits = 1; bits < g.full_mask() && !wall; ++bits)
                if (A.weight_of(Subset(bits)) == 1) wall = true;
            if (wall) ++wall_hits;
        } else {
            fingerprint = "git";
            if (m.atypical) ++wall_hits;
        }
        ++model_counts[fingerprint.empty() ? "full-space" : fingerprint];
        entries.push_back(std::move(e));
    }

    json doc = base_doc("scan");
    doc["n"] = opt.n;
    doc["entries"] = std::move(entries);
    json summary;
    summary["distinct_models"] = model_counts.size();
    summary["on_wall"] = wall_hits;
    json counts = json::object();
    for (const auto& [k, v] : model_counts) counts[k] = v;
    summary["model_counts"] = std::move(counts);
    doc["summary"] = std::move(summary);
    write_output(opt, report::dump(doc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory computations on moduli of pointed rational curves"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    auto add_common = [&](CLI::App* sub, bool weights, bool needs_n) {
        if (weights)
            sub->add_option("--weights", opt.weights_text, "comma-separated weights (p/q or decimal)")
                ->required();
        if (needs_n) sub->add_option("--n", opt.n, "number of marked points")->required();
        else sub->add_option("--n", opt.n, "number of marked points (cross-check)");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", opt.out_path, "output file (default stdout)");
        sub->add_option("--jobs", opt.jobs, "worker threads");
        sub->add_flag("--force", opt.force, "allow n > 14 curve enumeration");
        sub->callback([&command, sub] { command = sub->get_name(); });
    };

    for (const char* name : {"delta", "pushforward", "pullback", "difference", "delta-prime"})
        add_common(app.add_subcommand(name, "divisor class computation"), true, false);

    auto* curves = app.add_subcommand("curves", "vital curve enumeration and classification");
    add_common(curves, true, false);
    curves->add_flag("--table-check", opt.table_check,
                     "compare table formulas against direct pairings");

    auto* verify = app.add_subcommand("verify", "run the full property suite");
    add_common(verify, false, true);
    verify->add_option("--seed", opt.seed, "corpus seed");
    verify->add_option("--samples", opt.samples, "sampled weight data per regime");
    verify->add_option("--max-denominator", opt.max_denominator, "denominator bound");

    auto* model = app.add_subcommand("model", "report the selected birational model");
    add_common(model, true, false);

    auto* rank = app.add_subcommand("rank", "pairing-matrix rank over Q");
    add_common(rank, false, true);

    auto* scan = app.add_subcommand("scan", "model descriptors over a weight-space slice");
    add_common(scan, false, true);
    scan->add_option("--seed", opt.seed, "sampling seed");
    scan->add_option("--samples", opt.samples, "number of sampled weight data");
    scan->add_option("--max-denominator", opt.max_denominator, "denominator bound");
    scan->add_option("--grid", opt.grid, "symmetric-slice grid denominator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (command == "curves") return run_curves(opt);
        if (command == "verify") return run_verify(opt);
        if (command == "model") return run_model(opt);
        if (command == "rank") return run_rank(opt);
        if (command == "scan") return run_scan(opt);
        return run_class_command(command, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
