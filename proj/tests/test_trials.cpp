#include "qsym/trials.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "qsym/serialize.hpp"
#include "support/enumerate.hpp"

namespace qsym {
namespace {

TEST(RunTrials, SymmetricFunctionAlwaysAccepted) {
  TrialOptions o;
  o.trials = 1000;
  o.seed = 5;
  o.eps = 0.1;
  o.delta = 0.05;
  const TrialReport r =
      run_trials(parity_spec(6), TesterKind::kSymmetry, o);
  EXPECT_EQ(r.yes_count, 1000u);
  EXPECT_EQ(r.no_count, 0u);
  EXPECT_EQ(r.rejection_rate, 0.0);
  EXPECT_LE(r.max_queries, r.query_cap);
  ASSERT_TRUE(r.distance_available);
  EXPECT_EQ(r.exact_distance.numerator, 0u);
}

TEST(RunTrials, DictatorBasicStepRejectsAlways) {
  TrialOptions o;
  o.trials = 10000;
  o.seed = 3;
  const TrialReport r =
      run_trials(dictator_spec(2, 1), TesterKind::kSymmetryBasicStep, o);
  EXPECT_EQ(r.rejection_rate, 1.0);
  EXPECT_EQ(r.no_count, 10000u);
  EXPECT_EQ(r.max_queries, 2u);
  ASSERT_TRUE(r.distance_available);
  EXPECT_EQ(r.exact_distance, (DistanceValue{1, 4}));
}

TEST(RunTrials, ReportsAreBitIdenticalAcrossRepeatsAndThreadCounts) {
  TrialOptions o;
  o.trials = 400;
  o.seed = 77;
  o.eps = 0.2;
  o.delta = 0.2;
  const auto spec = random_table_spec(6, 9);
  const TrialReport a = run_trials(spec, TesterKind::kQuasiSymmetry, o);
  const TrialReport b = run_trials(spec, TesterKind::kQuasiSymmetry, o);
  o.threads = 3;
  const TrialReport c = run_trials(spec, TesterKind::kQuasiSymmetry, o);
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(b).dump());
  EXPECT_EQ(report_to_json(a).dump(), report_to_json(c).dump());
  EXPECT_EQ(report_to_csv(a), report_to_csv(c));
}

TEST(RunTrials, CountsAlwaysSumToTrials) {
  TrialOptions o;
  o.trials = 500;
  o.seed = 1;
  o.eps = 0.3;
  o.delta = 0.3;
  for (TesterKind k : {TesterKind::kSymmetry, TesterKind::kConstancy,
                       TesterKind::kQuasiSymmetry,
                       TesterKind::kSymmetryBasicStep,
                       TesterKind::kConstancyBasicStep}) {
    const TrialReport r = run_trials(random_table_spec(5, 21), k, o);
    EXPECT_EQ(r.yes_count + r.no_count, r.trials);
    EXPECT_LE(r.max_queries, r.query_cap);
  }
}

TEST(RunTrials, DistanceOmittedAboveTheOracleCap) {
  TrialOptions o;
  o.trials = 10;
  o.seed = 2;
  o.eps = 0.2;
  o.delta = 0.2;
  // n = 20 is past the symmetric-distance cap but fine for the tester
  const TrialReport r =
      run_trials(parity_spec(20), TesterKind::kSymmetry, o);
  EXPECT_FALSE(r.distance_available);
  EXPECT_EQ(r.yes_count, 10u);
}

TEST(RunTrials, TableEntryPointMatchesSpecEntryPoint) {
  TrialOptions o;
  o.trials = 200;
  o.seed = 12;
  o.eps = 0.25;
  o.delta = 0.1;
  const auto spec = random_table_spec(5, 31);
  const TruthTable tt = materialize_table(*build_function(spec));
  const TrialReport a = run_trials(spec, TesterKind::kSymmetry, o);
  const TrialReport b =
      run_trials_table(tt, "table:mem", TesterKind::kSymmetry, o);
  EXPECT_EQ(a.yes_count, b.yes_count);
  EXPECT_EQ(a.max_queries, b.max_queries);
  EXPECT_FALSE(b.spec_known);
  EXPECT_EQ(b.source, "table:mem");
  EXPECT_EQ(a.exact_distance, b.exact_distance);
}

TEST(Wilson, DegenerateCountsStayInUnitRange) {
  const WilsonInterval all = wilson_99(100, 100);
  EXPECT_GT(all.low, 0.9);
  EXPECT_EQ(all.high, 1.0);
  const WilsonInterval none = wilson_99(0, 100);
  EXPECT_EQ(none.low, 0.0);
  EXPECT_LT(none.high, 0.1);
  EXPECT_THROW(wilson_99(1, 0), std::invalid_argument);
}

TEST(Wilson, IntervalCoversTheExactRejectionProbability) {
  // exact per-step rejection probability by enumerating the sampler's
  // outcome space at n = 4; the 99% interval from repeated experiments
  // should cover it in at least 99% of repetitions (4 sigma slack)
  const auto spec = random_table_spec(4, 1001);
  const TruthTable tt = materialize_table(*build_function(spec));
  const double p_exact = test::exact_symmetry_step_rejection(tt);

  const int repeats = 250;
  const std::uint64_t trials_per_experiment = 1500;
  int covered = 0;
  for (int rep = 0; rep < repeats; ++rep) {
    TrialOptions o;
    o.trials = trials_per_experiment;
    o.seed = 5000 + rep;
    o.attach_distance = false;
    const TrialReport r =
        run_trials(spec, TesterKind::kSymmetryBasicStep, o);
    covered += r.wilson.low <= p_exact && p_exact <= r.wilson.high;
  }
  const double sigma = std::sqrt(0.99 * 0.01 / repeats);
  EXPECT_GE(static_cast<double>(covered) / repeats, 0.99 - 4 * sigma);
}

}  // namespace
}  // namespace qsym
