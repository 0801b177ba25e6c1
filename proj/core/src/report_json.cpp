#include "m0n/report_json.hpp"

#include <algorithm>

namespace m0n::report {

namespace {

// Presentation side of a pair: canonical under A when available, else the
// smaller side with ties to the side containing 1.
Subset display_rep(Subset key, const GroundSet& g, const WeightDatum* A) {
    if (A) return canonicalize(key, *A).members;
    Subset other = complement(key, g);
    if (other.size() < key.size()) return other;
    return key;  // pair keys contain 1, which wins the tie
}

const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

}  // namespace

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json weights_json(const WeightDatum& A) {
    json arr = json::array();
    for (int i = 1; i <= A.n(); ++i) arr.push_back(to_string(A.weight(i)));
    return arr;
}

std::string subset_key(Subset I) {
    std::string out;
    auto mem = I.members();
    for (size_t i = 0; i < mem.size(); ++i) {
        out += std::to_string(mem[i]);
        if (i + 1 < mem.size()) out += ",";
    }
    return out;
}

json class_json(const DivisorClass& d, const WeightDatum* A) {
    json coeffs = json::object();
    for (const auto& [key, v] : d.coords())
        coeffs[subset_key(display_rep(key, d.ground(), A))] = to_string(v);
    return coeffs;
}

json curve_entries_json(const std::vector<CurveEntry>& entries, const WeightDatum& A,
                        bool table_check, const DivisorClass* pbpf) {
    json arr = json::array();
    for (const CurveEntry& e : entries) {
        json row;
        row["partition"] = format_partition(e.curve.partition);
        row["contracted"] = e.contracted;
        row["type"] = e.type ? e.type->str() : (e.contracted ? "contracted" : "");
        if (table_check && pbpf) {
            Rational direct = pair(*pbpf, e.curve.partition);
            row["direct"] = to_string(direct);
            if (e.type) {
                Rational tv = table_value(*e.type, e.curve, A.n());
                row["table"] = to_string(tv);
                row["match"] = tv == direct;
            } else {
                row["table"] = "";
                row["match"] = direct == 0;
            }
        }
        arr.push_back(std::move(row));
    }
    return arr;
}

json verify_json(const VerificationReport& r) {
    json checks = json::object();
    for (const CheckResult& c : r.checks) {
        json entry;
        entry["status"] = status_str(c.status);
        entry["failures"] = c.failures;
        entry["counterexamples"] = c.counterexamples;
        checks[c.name] = std::move(entry);
    }
    json doc;
    doc["checks"] = std::move(checks);
    doc["counts"] = {{"boundary_data", r.boundary_data},
                     {"contracted_curves", r.contracted_curves},
                     {"curves_checked", r.curves_checked},
                     {"interior_data", r.interior_data}};
    doc["types_unwitnessed"] = r.types_unwitnessed;
    doc["types_witnessed"] = r.types_witnessed;
    return doc;
}

json model_json(const ModelDescriptor& m, const WeightDatum& A) {
    json doc;
    doc["n"] = A.n();
    doc["weights"] = weights_json(A);
    if (m.regime == Regime::Interior) {
        doc["model"] = "hassett";
        json coll = json::array();
        for (Subset I : m.collisions) coll.push_back(subset_key(I));
        doc["collisions"] = std::move(coll);
        doc["contracted_divisors"] = m.contracted_divisors;
        doc["contracted_curves"] = m.contracted_curves;
        // Conditional on the F-conjecture: only the finite positivity
        // computation is certified here.
        doc["verified_ample_assuming_f_conjecture"] = m.verified_ample;
    } else {
        doc["model"] = "git-quotient";
        doc["linearization"] = weights_json(A);
        json walls = json::array();
        for (Subset I : m.walls) walls.push_back(subset_key(I));
        doc["walls"] = std::move(walls);
        doc["atypical"] = m.atypical;
    }
    if (m.symmetric) {
        json sym;
        sym["alpha"] = to_string(m.symmetric->alpha);
        sym["beta"] = to_string(m.symmetric->beta);
        sym["m"] = m.symmetric->m;
        if (m.symmetric->chamber_k)
            sym["chamber_k"] = *m.symmetric->chamber_k;
        sym["git_range"] = m.symmetric->git_range;
        doc["symmetric"] = std::move(sym);
    }
    return doc;
}

std::string class_csv(const DivisorClass& d, const WeightDatum* A) {
    std::string out = "subset,value\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [key, v] : d.coords())
        rows.emplace_back(subset_key(display_rep(key, d.ground(), A)), to_string(v));
    std::sort(rows.begin(), rows.end());
    for (const auto& [s, v] : rows) out += s == "" ? "" : (std::string() + "\"" + s + "\"," + v + "\n");
    return out;
}

std::string curve_entries_csv(const std::vector<CurveEntry>& entries, const WeightDatum& A,
                              bool table_check, const DivisorClass* pbpf) {
    std::string out = table_check ? "partition,contracted,type,table,direct,match\n"
                                  : "partition,contracted,type\n";
    for (const CurveEntry& e : entries) {
        std::string type = e.type ? e.type->str() : (e.contracted ? "contracted" : "");
        out += format_partition(e.curve.partition);
        out += e.contracted ? ",1," : ",0,";
        out += "\"" + type + "\"";
        if (table_check && pbpf) {
            Rational direct = pair(*pbpf, e.curve.partition);
            std::string tv, match;
            if (e.type) {
                Rational t = table_value(*e.type, e.curve, A.n());
                tv = to_string(t);
                match = t == direct ? "1" : "0";
            } else {
                match = direct == 0 ? "1" : "0";
            }
            out += "," + tv + "," + to_string(direct) + "," + match;
        }
        out += "\n";
    }
    return out;
}

}  // namespace m0n::report
