// Command-line surface: randomized tests for symmetry, constancy and
// quasi-symmetry, the dependency-set estimate, exact brute-force distances,
// witness verification, and query-count benchmarking. Results are JSON
// (default) or CSV on stdout. Exit code 0 = yes/success, 1 = no verdict
// (or failed verification), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsym/exact.hpp"
#include "qsym/families.hpp"
#include "qsym/serialize.hpp"
#include "qsym/testers.hpp"
#include "qsym/trials.hpp"
#include "qsym/truth_table.hpp"

namespace {

using nlohmann::json;
using namespace qsym;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

struct SourceFlags {
  std::string table_path;
  std::string family;
  int n = -1;
  int value = 0;
  int index = 0;
  int threshold = 0;
  std::string args_csv;
  std::string levels;
  std::uint64_t flips = 0;
  std::uint64_t fn_seed = 0;
  std::string base_family;
  std::uint64_t base_seed = 0;
};

void add_source_flags(CLI::App* cmd, SourceFlags& s) {
  cmd->add_option("--table", s.table_path,
                  "truth-table file (see README for the format)");
  cmd->add_option("--family", s.family,
                  "function family: const|dictator|parity|majority|threshold|"
                  "random-table|sym-junta|perturbed");
  cmd->add_option("--n", s.n, "arity for --family");
  cmd->add_option("--value", s.value, "const: the constant bit");
  cmd->add_option("--index", s.index, "dictator: decisive argument (1-based)");
  cmd->add_option("--threshold", s.threshold, "threshold: accept weight >= t");
  cmd->add_option("--args", s.args_csv,
                  "sym-junta: comma-separated argument indices");
  cmd->add_option("--levels", s.levels,
                  "sym-junta: value per weight of the chosen arguments, e.g. 0110");
  cmd->add_option("--flips", s.flips, "perturbed: number of entries to flip");
  cmd->add_option("--fn-seed", s.fn_seed,
                  "content seed for random-table / flip choice for perturbed");
  cmd->add_option("--base", s.base_family, "perturbed: base family name");
  cmd->add_option("--base-seed", s.base_seed,
                  "perturbed: content seed when the base is random-table");
}

DependencySet parse_index_list(const std::string& csv) {
  DependencySet out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty index in list");
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::uint8_t> parse_levels(const std::string& levels) {
  std::vector<std::uint8_t> out;
  for (char c : levels) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("levels must contain only '0'/'1'");
    out.push_back(c == '1');
  }
  return out;
}

FunctionSpec family_spec_from_flags(const SourceFlags& s,
                                    const std::string& family_name,
                                    std::uint64_t fn_seed) {
  if (s.n < 0) throw std::invalid_argument("--family requires --n");
  const Family fam = family_from_name(family_name);
  switch (fam) {
    case Family::kConst: return const_spec(s.n, s.value != 0);
    case Family::kDictator: return dictator_spec(s.n, s.index);
    case Family::kParity: return parity_spec(s.n);
    case Family::kMajority: return majority_spec(s.n);
    case Family::kThreshold: return threshold_spec(s.n, s.threshold);
    case Family::kRandomTable: return random_table_spec(s.n, fn_seed);
    case Family::kSymJunta:
      return sym_junta_spec(s.n, parse_index_list(s.args_csv),
                            parse_levels(s.levels));
    case Family::kPerturbed: {
      if (s.base_family.empty() || s.base_family == "perturbed")
        throw std::invalid_argument(
            "--family perturbed needs --base <non-perturbed family>");
      FunctionSpec base = family_spec_from_flags(s, s.base_family, s.base_seed);
      return perturbed_spec(std::move(base), s.flips, fn_seed);
    }
  }
  throw std::logic_error("family_spec_from_flags: unreachable");
}

// A resolved function source: either a constructed family or a loaded table.
struct Source {
  std::shared_ptr<const BoolFn> fn;
  std::optional<FunctionSpec> spec;
  std::optional<TruthTable> table;
  std::string label;
  int n = 0;
};

Source resolve_source(const SourceFlags& s) {
  const bool have_table = !s.table_path.empty();
  const bool have_family = !s.family.empty();
  if (have_table == have_family)
    throw std::invalid_argument("give exactly one of --table or --family");
  Source out;
  if (have_table) {
    out.table = load_truth_table_file(s.table_path);
    out.fn = std::make_shared<TableFn>(*out.table);
    out.label = "table:" + s.table_path;
    out.n = out.table->arity();
  } else {
    out.spec = family_spec_from_flags(s, s.family, s.fn_seed);
    out.fn = build_function(*out.spec);
    out.label = out.spec->label();
    out.n = out.spec->n;
  }
  return out;
}

// Materializes the source for the exact oracles (may raise CapacityError).
const TruthTable& source_table(Source& src) {
  if (!src.table) src.table = materialize_table(*src.fn);
  return *src.table;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct CommonFlags {
  double eps = 0.0, delta = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  int threads = 0;
  std::string format = "json";
};

void add_run_flags(CLI::App* cmd, CommonFlags& c, bool with_params) {
  if (with_params) {
    cmd->add_option("--eps", c.eps, "distance parameter in (0,1)")->required();
    cmd->add_option("--delta", c.delta, "error probability in (0,1)")
        ->required();
  }
  cmd->add_option("--seed", c.seed, "root seed, recorded in the output");
  cmd->add_option("--trials", c.trials, "number of independent runs");
  cmd->add_option("--threads", c.threads, "worker threads (0 = auto)");
  cmd->add_option("--format", c.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

int run_single_test(TesterKind kind, Source& src, const CommonFlags& c) {
  FnOracle oracle(src.fn);
  RandomSource rng(c.seed);
  Verdict v;
  std::uint64_t k = 0;
  switch (kind) {
    case TesterKind::kSymmetry:
      v = symmetry_test(oracle, c.eps, c.delta, rng);
      k = repetitions(c.eps, c.delta);
      break;
    case TesterKind::kConstancy:
      v = constancy_test(oracle, c.eps, c.delta, rng);
      k = repetitions(c.eps, c.delta);
      break;
    case TesterKind::kQuasiSymmetry:
      v = quasisymmetry_test(oracle, c.eps, c.delta, rng);
      k = quasisym_repetitions(c.delta / 2.0);
      break;
    default:
      throw std::invalid_argument("test: unknown tester");
  }
  const RunInfo info{tester_name(kind), c.eps, c.delta, src.n, c.seed, k};
  if (c.format == "csv")
    std::cout << verdict_to_csv(v, info);
  else
    emit(verdict_to_json(v, info));
  return v.accepted ? kExitYes : kExitNo;
}

int run_experiment(TesterKind kind, Source& src, const CommonFlags& c,
                   bool attach_distance) {
  TrialOptions options;
  options.trials = c.trials;
  options.seed = c.seed;
  options.eps = c.eps;
  options.delta = c.delta;
  options.threads = c.threads;
  options.attach_distance = attach_distance;
  TrialReport report;
  if (src.spec) {
    report = run_trials(*src.spec, kind, options);
  } else {
    report = run_trials_table(*src.table, src.label, kind, options);
  }
  if (c.format == "csv")
    std::cout << report_to_csv(report);
  else
    emit(report_to_json(report));
  return kExitYes;
}

int run_estimate(Source& src, const CommonFlags& c) {
  FnOracle oracle(src.fn);
  RandomSource rng(c.seed);
  const EstimateResult r = dependency_estimate(oracle, c.eps, c.delta, rng);
  const RunInfo info{"deps", c.eps, c.delta, src.n, c.seed, 0};
  if (c.format == "csv") {
    std::string joined;
    for (int idx : r.dependent_args)
      joined += (joined.empty() ? "" : ";") + std::to_string(idx);
    std::cout << "test,n,eps,delta,queries,seed,dependent_args\n"
              << "deps," << src.n << "," << json(c.eps).dump() << ","
              << json(c.delta).dump() << "," << r.queries_used << "," << c.seed
              << "," << joined << "\n";
  } else {
    emit(estimate_to_json(r, info));
  }
  return kExitYes;
}

int run_distance(const std::string& cls, Source& src,
                 const std::string& junta_csv, const std::string& format) {
  const TruthTable& tt = source_table(src);
  DistanceValue d;
  std::optional<DependencySet> junta;
  if (cls == "sym") {
    d = dist_sym(tt);
  } else if (cls == "const") {
    d = dist_const(tt);
  } else if (cls == "qsym") {
    d = dist_quasisym(tt);
  } else {
    junta = parse_index_list(junta_csv);
    d = dist_junta(tt, *junta);
  }
  if (format == "csv")
    std::cout << distance_to_csv(cls, tt.arity(), d);
  else
    emit(distance_to_json(cls, tt.arity(), d, junta ? &*junta : nullptr));
  return kExitYes;
}

int run_verify(Source& src, const std::string& witness_path,
               const std::string& format) {
  json parsed;
  try {
    if (witness_path == "-") {
      parsed = json::parse(std::cin);
    } else {
      std::ifstream in(witness_path);
      if (!in) throw FormatError("cannot open witness file: " + witness_path);
      parsed = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("witness JSON: ") + e.what());
  }
  // a verdict record may be passed whole; look inside for its witness
  if (parsed.is_object() && parsed.contains("witness"))
    parsed = parsed["witness"];
  const Witness w = witness_from_json(parsed);
  FnOracle oracle(src.fn);
  const bool ok = verify_witness(oracle, w);
  if (format == "csv")
    std::cout << "valid\n" << (ok ? "1" : "0") << "\n";
  else
    emit(json{{"valid", ok}});
  return ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomized property tests for Boolean functions: symmetry, "
               "constancy, quasi-symmetry, and dependency-set estimation"};
  app.require_subcommand(1);

  // test sym|const|qsym
  CLI::App* test = app.add_subcommand("test", "run a property test");
  test->require_subcommand(1);
  struct TestCmd {
    CLI::App* cmd = nullptr;
    TesterKind kind = TesterKind::kSymmetry;
    SourceFlags src;
    CommonFlags common;
  };
  std::vector<std::unique_ptr<TestCmd>> test_cmds;
  for (auto [name, kind, help] :
       {std::tuple{"sym", TesterKind::kSymmetry, "test for symmetry"},
        std::tuple{"const", TesterKind::kConstancy, "test for constancy"},
        std::tuple{"qsym", TesterKind::kQuasiSymmetry,
                   "test for quasi-symmetry"}}) {
    auto tc = std::make_unique<TestCmd>();
    tc->cmd = test->add_subcommand(name, help);
    tc->kind = kind;
    add_source_flags(tc->cmd, tc->src);
    add_run_flags(tc->cmd, tc->common, /*with_params=*/true);
    test_cmds.push_back(std::move(tc));
  }

  // estimate deps
  CLI::App* estimate =
      app.add_subcommand("estimate", "run an attribute estimate");
  estimate->require_subcommand(1);
  CLI::App* deps =
      estimate->add_subcommand("deps", "estimate the dependency set");
  SourceFlags deps_src;
  CommonFlags deps_common;
  add_source_flags(deps, deps_src);
  add_run_flags(deps, deps_common, /*with_params=*/true);

  // distance sym|const|junta|qsym
  CLI::App* distance =
      app.add_subcommand("distance", "exact brute-force distance to a class");
  distance->require_subcommand(1);
  struct DistCmd {
    CLI::App* cmd = nullptr;
    std::string cls;
    SourceFlags src;
    std::string junta_csv;
    std::string format = "json";
  };
  std::vector<std::unique_ptr<DistCmd>> dist_cmds;
  for (auto [name, help] :
       {std::tuple{"sym", "distance to the symmetric functions"},
        std::tuple{"const", "distance to the constant functions"},
        std::tuple{"junta", "distance to the functions on given arguments"},
        std::tuple{"qsym", "distance to the quasi-symmetric functions"}}) {
    auto dc = std::make_unique<DistCmd>();
    dc->cmd = distance->add_subcommand(name, help);
    dc->cls = name;
    add_source_flags(dc->cmd, dc->src);
    if (dc->cls == "junta")
      dc->cmd
          ->add_option("--junta", dc->junta_csv,
                       "comma-separated argument indices of the class")
          ->required();
    dc->cmd->add_option("--format", dc->format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    dist_cmds.push_back(std::move(dc));
  }

  // verify
  CLI::App* verify =
      app.add_subcommand("verify", "re-check a witness against a function");
  SourceFlags verify_src;
  std::string witness_path;
  std::string verify_format = "json";
  add_source_flags(verify, verify_src);
  verify->add_option("--witness", witness_path,
                     "witness JSON file ('-' for stdin)")
      ->required();
  verify->add_option("--format", verify_format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // bench
  CLI::App* bench = app.add_subcommand(
      "bench", "query-count accounting over repeated runs (no exact distance)");
  SourceFlags bench_src;
  CommonFlags bench_common;
  std::string bench_tester = "sym";
  add_source_flags(bench, bench_src);
  bench->add_option("--tester", bench_tester,
                    "sym|const|qsym|sym-basic|const-basic")
      ->check(CLI::IsMember({"sym", "const", "qsym", "sym-basic",
                             "const-basic"}));
  bench->add_option("--eps", bench_common.eps, "distance parameter");
  bench->add_option("--delta", bench_common.delta, "error probability");
  bench->add_option("--seed", bench_common.seed, "root seed");
  bench->add_option("--trials", bench_common.trials, "number of runs");
  bench->add_option("--threads", bench_common.threads, "worker threads");
  bench->add_option("--format", bench_common.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    for (auto& tc : test_cmds) {
      if (!tc->cmd->parsed()) continue;
      Source src = resolve_source(tc->src);
      if (tc->common.trials > 1)
        return run_experiment(tc->kind, src, tc->common,
                              /*attach_distance=*/true);
      return run_single_test(tc->kind, src, tc->common);
    }
    if (deps->parsed()) {
      Source src = resolve_source(deps_src);
      return run_estimate(src, deps_common);
    }
    for (auto& dc : dist_cmds) {
      if (!dc->cmd->parsed()) continue;
      Source src = resolve_source(dc->src);
      return run_distance(dc->cls, src, dc->junta_csv, dc->format);
    }
    if (verify->parsed()) {
      Source src = resolve_source(verify_src);
      return run_verify(src, witness_path, verify_format);
    }
    if (bench->parsed()) {
      Source src = resolve_source(bench_src);
      const TesterKind kind = tester_from_name(bench_tester);
      if (tester_takes_params(kind))
        (void)repetitions(bench_common.eps, bench_common.delta);
      return run_experiment(kind, src, bench_common,
                            /*attach_distance=*/false);
    }
    throw std::invalid_argument("no subcommand given");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
