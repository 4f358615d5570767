#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qsym/exact.hpp"
#include "qsym/families.hpp"
#include "qsym/testers.hpp"

namespace qsym {

enum class TesterKind {
  kSymmetry,
  kConstancy,
  kQuasiSymmetry,
  kSymmetryBasicStep,   // single two-query probe, no (eps, delta)
  kConstancyBasicStep,
};

std::string tester_name(TesterKind k);
TesterKind tester_from_name(const std::string& name);
bool tester_takes_params(TesterKind k);

// Hard per-run query cap of a tester on an n-argument function.
std::uint64_t tester_query_cap(TesterKind k, int n, double eps, double delta);

// Two-sided 99% Wilson score interval for successes/trials.
struct WilsonInterval {
  double low = 0.0, high = 0.0;
};
WilsonInterval wilson_99(std::uint64_t successes, std::uint64_t trials);

// Aggregate of `trials` independent tester runs on one function. Trial i
// draws from the child stream seed*i (i = 1..trials), so reports replay
// bit-identically for a given root seed regardless of thread count.
struct TrialReport {
  bool spec_known = true;  // false when the function came from a table file
  std::string source;      // spec label, or the table-file description
  FunctionSpec spec;
  TesterKind tester = TesterKind::kSymmetry;
  double eps = 0.0, delta = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t yes_count = 0, no_count = 0;
  double mean_queries = 0.0;
  std::uint64_t max_queries = 0;
  std::uint64_t query_cap = 0;
  double rejection_rate = 0.0;
  WilsonInterval wilson;
  bool distance_available = false;  // exact distance attached when the
  DistanceValue exact_distance;     // arity sits within the oracle caps
  std::uint64_t seed = 0;
};

struct TrialOptions {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  double eps = 0.0, delta = 0.0;  // ignored by basic-step testers
  int threads = 0;                // 0 = hardware concurrency
  bool attach_distance = true;
};

TrialReport run_trials(const FunctionSpec& spec, TesterKind tester,
                       const TrialOptions& options);

// Same experiment on a function loaded from a truth-table file.
TrialReport run_trials_table(const TruthTable& table, const std::string& label,
                             TesterKind tester, const TrialOptions& options);

}  // namespace qsym
