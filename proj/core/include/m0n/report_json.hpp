#ifndef M0N_REPORT_JSON_HPP
#define M0N_REPORT_JSON_HPP

#include <json.hpp>

#include "m0n/divisor.hpp"
#include "m0n/verify.hpp"

namespace m0n::report {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// All documents: UTF-8, keys sorted (nlohmann object = std::map), rationals
// as "p/q" strings, no floating-point literals, newline-terminated.
std::string dump(const json& doc);

json weights_json(const WeightDatum& A);

// "1,2,5" style key for a subset, members ascending.
std::string subset_key(Subset I);

// Coefficients keyed by subset. When A is given the printed representative
// is the canonical (lighter) side; otherwise the smaller side, ties to the
// side containing 1.
json class_json(const DivisorClass& d, const WeightDatum* A);

json curve_entries_json(const std::vector<CurveEntry>& entries, const WeightDatum& A,
                        bool table_check, const DivisorClass* pbpf);

json verify_json(const VerificationReport& r);

json model_json(const ModelDescriptor& m, const WeightDatum& A);

// CSV renderings with a fixed documented column order.
std::string class_csv(const DivisorClass& d, const WeightDatum* A);
std::string curve_entries_csv(const std::vector<CurveEntry>& entries, const WeightDatum& A,
                              bool table_check, const DivisorClass* pbpf);

}  // namespace m0n::report

#endif
