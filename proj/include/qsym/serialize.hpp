#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qsym/exact.hpp"
#include "qsym/families.hpp"
#include "qsym/testers.hpp"
#include "qsym/trials.hpp"
#include "qsym/witness.hpp"

namespace qsym {

// Stable machine-readable schemas; every field is documented in README.md.
// Points serialize as bitstrings with argument 1 leftmost (display
// convention, independent of the table-index convention).

nlohmann::json witness_to_json(const Witness& w);
// FormatError on anything that does not match the emitted schema.
Witness witness_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const FunctionSpec& spec);

// Context of a single tester run, echoed into its JSON record.
struct RunInfo {
  std::string test;  // sym | const | qsym | deps
  double eps = 0.0, delta = 0.0;
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t k = 0;  // repetition count of the outer loop
};

nlohmann::json verdict_to_json(const Verdict& v, const RunInfo& info);
nlohmann::json estimate_to_json(const EstimateResult& e, const RunInfo& info);
nlohmann::json distance_to_json(const std::string& cls, int n,
                                const DistanceValue& d,
                                const DependencySet* junta_args = nullptr);
nlohmann::json report_to_json(const TrialReport& r);

// Flat CSV (header line + data line) carrying the same numeric values as the
// JSON encoding.
std::string report_to_csv(const TrialReport& r);
std::string verdict_to_csv(const Verdict& v, const RunInfo& info);
std::string distance_to_csv(const std::string& cls, int n,
                            const DistanceValue& d);

}  // namespace qsym
