#include "qsym/trials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qsym/random.hpp"

namespace qsym {

std::string tester_name(TesterKind k) {
  switch (k) {
    case TesterKind::kSymmetry: return "sym";
    case TesterKind::kConstancy: return "const";
    case TesterKind::kQuasiSymmetry: return "qsym";
    case TesterKind::kSymmetryBasicStep: return "sym-basic";
    case TesterKind::kConstancyBasicStep: return "const-basic";
  }
  throw std::logic_error("tester_name: unreachable");
}

TesterKind tester_from_name(const std::string& name) {
  for (TesterKind k :
       {TesterKind::kSymmetry, TesterKind::kConstancy,
        TesterKind::kQuasiSymmetry, TesterKind::kSymmetryBasicStep,
        TesterKind::kConstancyBasicStep})
    if (tester_name(k) == name) return k;
  throw std::invalid_argument("unknown tester: " + name);
}

bool tester_takes_params(TesterKind k) {
  return k == TesterKind::kSymmetry || k == TesterKind::kConstancy ||
         k == TesterKind::kQuasiSymmetry;
}

std::uint64_t tester_query_cap(TesterKind k, int n, double eps, double delta) {
  switch (k) {
    case TesterKind::kSymmetry: return symmetry_test_cap(eps, delta);
    case TesterKind::kConstancy: return constancy_test_cap(eps, delta);
    case TesterKind::kQuasiSymmetry:
      return quasisymmetry_test_cap(n, eps, delta);
    case TesterKind::kSymmetryBasicStep:
    case TesterKind::kConstancyBasicStep: return 2;
  }
  throw std::logic_error("tester_query_cap: unreachable");
}

WilsonInterval wilson_99(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("wilson_99: zero trials");
  // z for a two-sided 99% interval
  constexpr double z = 2.5758293035489004;
  const double t = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double center = (phat + z2 / (2.0 * t)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / t + z2 / (4.0 * t * t)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

Verdict run_one(TesterKind k, BooleanOracle& f, double eps, double delta,
                RandomSource& rng) {
  switch (k) {
    case TesterKind::kSymmetry: return symmetry_test(f, eps, delta, rng);
    case TesterKind::kConstancy: return constancy_test(f, eps, delta, rng);
    case TesterKind::kQuasiSymmetry:
      return quasisymmetry_test(f, eps, delta, rng);
    case TesterKind::kSymmetryBasicStep: return symmetry_basic_step(f, rng);
    case TesterKind::kConstancyBasicStep: return constancy_basic_step(f, rng);
  }
  throw std::logic_error("run_one: unreachable");
}

struct Partial {
  std::uint64_t yes = 0, no = 0, query_sum = 0, query_max = 0;

  void merge(const Partial& other) {
    yes += other.yes;
    no += other.no;
    query_sum += other.query_sum;
    query_max = std::max(query_max, other.query_max);
  }
};

// Distance to the class the tester targets, when the arity sits within the
// exact oracle's cap.
void attach_distance(TrialReport& report, const TruthTable& tt,
                     TesterKind tester) {
  const int n = tt.arity();
  switch (tester) {
    case TesterKind::kSymmetry:
    case TesterKind::kSymmetryBasicStep:
      if (n > kDistSymMaxArity) return;
      report.exact_distance = dist_sym(tt);
      break;
    case TesterKind::kConstancy:
    case TesterKind::kConstancyBasicStep:
      report.exact_distance = dist_const(tt);
      break;
    case TesterKind::kQuasiSymmetry:
      if (n > kDistQuasisymMaxArity) return;
      report.exact_distance = dist_quasisym(tt);
      break;
  }
  report.distance_available = true;
}

TrialReport run_core(const std::shared_ptr<const BoolFn>& fn, int n,
                     TesterKind tester, const TrialOptions& options) {
  if (options.trials == 0)
    throw std::invalid_argument("run_trials: trials must be >= 1");
  if (tester_takes_params(tester)) {
    // validate up front so a bad experiment fails before running
    (void)repetitions(options.eps, options.delta);
  }

  const RandomSource root(options.seed);
  const auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    Partial part;
    FnOracle oracle(fn);  // per-worker oracle; tallies merged afterwards
    for (std::uint64_t i = lo; i < hi; ++i) {
      RandomSource trial_rng = root.child(i);
      const Verdict v =
          run_one(tester, oracle, options.eps, options.delta, trial_rng);
      part.yes += v.accepted;
      part.no += !v.accepted;
      part.query_sum += v.queries_used;
      part.query_max = std::max(part.query_max, v.queries_used);
    }
    return part;
  };

  unsigned workers = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers =
      static_cast<unsigned>(std::min<std::uint64_t>(workers, options.trials));

  Partial total;
  if (workers <= 1) {
    total = run_range(1, options.trials + 1);
  } else {
    std::vector<Partial> parts(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (options.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = 1 + w * chunk;
      const std::uint64_t hi = std::min(options.trials + 1, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, w, lo, hi] { parts[w] = run_range(lo, hi); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : parts) total.merge(p);
  }

  TrialReport report;
  report.tester = tester;
  report.eps = options.eps;
  report.delta = options.delta;
  report.trials = options.trials;
  report.yes_count = total.yes;
  report.no_count = total.no;
  report.mean_queries = static_cast<double>(total.query_sum) /
                        static_cast<double>(options.trials);
  report.max_queries = total.query_max;
  report.query_cap = tester_query_cap(tester, n, options.eps, options.delta);
  report.rejection_rate =
      static_cast<double>(total.no) / static_cast<double>(options.trials);
  report.wilson = wilson_99(total.no, options.trials);
  report.seed = options.seed;
  if (report.max_queries > report.query_cap)
    throw std::logic_error("run_trials: tester exceeded its query cap");
  return report;
}

}  // namespace

TrialReport run_trials(const FunctionSpec& spec, TesterKind tester,
                       const TrialOptions& options) {
  const auto fn = build_function(spec);
  TrialReport report = run_core(fn, spec.n, tester, options);
  report.spec = spec;
  report.spec_known = true;
  report.source = spec.label();
  if (options.attach_distance && spec.n <= TruthTable::kMaxArity)
    attach_distance(report, materialize_table(*fn), tester);
  return report;
}

TrialReport run_trials_table(const TruthTable& table, const std::string& label,
                             TesterKind tester, const TrialOptions& options) {
  const auto fn = std::make_shared<TableFn>(table);
  TrialReport report = run_core(fn, table.arity(), tester, options);
  report.spec_known = false;
  report.source = label;
  report.spec.n = table.arity();
  if (options.attach_distance) attach_distance(report, table, tester);
  return report;
}

}  // namespace qsym
