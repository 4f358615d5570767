#include "qsym/testers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsym {

namespace {

void check_params(double eps, double delta) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("eps must lie in the open interval (0,1)");
  if (!(delta > 0.0) || !(delta < 1.0))
    throw std::invalid_argument("delta must lie in the open interval (0,1)");
}

// Ceiling that tolerates one ulp of rounding in the logarithm, so parameters
// sitting exactly on an integer boundary (e.g. delta = 1/e with eps = 1/2)
// land on the intended value.
std::uint64_t ceil_reps(double v) {
  if (!(v < 9.0e15))
    throw std::invalid_argument("repetition count out of supported range");
  const double c = std::ceil(v - 1e-9);
  return c < 1.0 ? 1 : static_cast<std::uint64_t>(c);
}

void enforce_cap(std::uint64_t used, std::uint64_t cap, const char* what) {
  if (used > cap)
    throw std::logic_error(std::string(what) + ": query cap exceeded (" +
                           std::to_string(used) + " > " + std::to_string(cap) +
                           ")");
}

std::uint64_t to_u64_cap(unsigned __int128 v) {
  if (v > static_cast<unsigned __int128>(UINT64_MAX))
    throw std::invalid_argument("query cap out of supported range");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::uint64_t repetitions(double eps, double delta) {
  check_params(eps, delta);
  return ceil_reps((1.0 / eps) * std::log(1.0 / delta));
}

int ceil_log_three_halves(int n) {
  if (n <= 1) return 0;
  unsigned __int128 pow3 = 1, n_pow2 = static_cast<unsigned __int128>(n);
  int q = 0;
  while (pow3 < n_pow2) {
    pow3 *= 3;
    n_pow2 *= 2;
    ++q;
  }
  return q;
}

std::uint64_t quasisym_repetitions(double delta_prime) {
  if (!(delta_prime > 0.0) || !(delta_prime < 1.0))
    throw std::invalid_argument("delta' must lie in the open interval (0,1)");
  return ceil_reps(std::log(1.0 / delta_prime) / std::log(4.0 / 3.0));
}

std::uint64_t symmetry_test_cap(double eps, double delta) {
  return 2 * repetitions(eps, delta);
}

std::uint64_t constancy_test_cap(double eps, double delta) {
  return 2 * repetitions(eps, delta);
}

std::uint64_t dependency_search_cap(int arity) {
  return static_cast<std::uint64_t>(ceil_log_three_halves(arity));
}

std::uint64_t dependency_estimate_cap(int arity, double eps, double delta) {
  check_params(eps, delta);
  if (arity == 0) return 0;
  const unsigned __int128 per_round =
      2 * static_cast<unsigned __int128>(repetitions(eps, delta / arity)) +
      static_cast<unsigned __int128>(ceil_log_three_halves(arity));
  return to_u64_cap(static_cast<unsigned __int128>(arity) * per_round);
}

std::uint64_t quasisymmetry_test_cap(int arity, double eps, double delta) {
  check_params(eps, delta);
  const unsigned __int128 estimate =
      dependency_estimate_cap(arity, eps / 4.0, delta / 2.0);
  const unsigned __int128 steps =
      static_cast<unsigned __int128>(quasisym_repetitions(delta / 2.0)) *
      (2 * static_cast<unsigned __int128>(repetitions(eps / 4.0, 0.5)));
  return to_u64_cap(estimate + steps);
}

Verdict symmetry_basic_step(BooleanOracle& f, RandomSource& rng) {
  if (f.arity() <= 1) return {true, std::nullopt, 0};
  const Point x = sample_excluding_poles(f.arity(), rng);
  const Point y = sample_same_weight_excluding(x, rng);
  const bool fx = f.query(x);
  const bool fy = f.query(y);
  if (fx == fy) return {true, std::nullopt, 2};
  return {false, NonSymmetryWitness{x, y, fx, fy}, 2};
}

Verdict symmetry_test(BooleanOracle& f, double eps, double delta,
                      RandomSource& rng) {
  check_params(eps, delta);
  if (f.arity() <= 1) return {true, std::nullopt, 0};
  const std::uint64_t k = repetitions(eps, delta);
  const std::uint64_t cap = 2 * k;
  const std::uint64_t start = f.queries();
  for (std::uint64_t i = 0; i < k; ++i) {
    Verdict step = symmetry_basic_step(f, rng);
    if (!step.accepted) {
      const std::uint64_t used = f.queries() - start;
      enforce_cap(used, cap, "symmetry_test");
      return {false, std::move(step.witness), used};
    }
  }
  const std::uint64_t used = f.queries() - start;
  enforce_cap(used, cap, "symmetry_test");
  return {true, std::nullopt, used};
}

Verdict constancy_basic_step(BooleanOracle& f, RandomSource& rng) {
  if (f.arity() == 0) return {true, std::nullopt, 0};
  const Point x = sample_any(f.arity(), rng);
  const Point y = sample_excluding(x, rng);
  const bool fx = f.query(x);
  const bool fy = f.query(y);
  if (fx == fy) return {true, std::nullopt, 2};
  return {false, NonConstancyWitness{x, y, fx, fy}, 2};
}

Verdict constancy_test(BooleanOracle& f, double eps, double delta,
                       RandomSource& rng) {
  check_params(eps, delta);
  if (f.arity() == 0) return {true, std::nullopt, 0};
  const std::uint64_t k = repetitions(eps, delta);
  const std::uint64_t cap = 2 * k;
  const std::uint64_t start = f.queries();
  for (std::uint64_t i = 0; i < k; ++i) {
    Verdict step = constancy_basic_step(f, rng);
    if (!step.accepted) {
      const std::uint64_t used = f.queries() - start;
      enforce_cap(used, cap, "constancy_test");
      return {false, std::move(step.witness), used};
    }
  }
  const std::uint64_t used = f.queries() - start;
  enforce_cap(used, cap, "constancy_test");
  return {true, std::nullopt, used};
}

ArgDependencyWitness dependency_search(BooleanOracle& f, Point x, Point y,
                                       bool fx, bool fy) {
  if (x.arity() != f.arity() || y.arity() != f.arity())
    throw std::invalid_argument("dependency_search: point arity mismatch");
  if (fx == fy)
    throw std::invalid_argument(
        "dependency_search: endpoints must take different values");
  const std::uint64_t cap = dependency_search_cap(f.arity());
  const std::uint64_t start = f.queries();
  for (;;) {
    const auto [d, diff] = xor_delta(x, y);
    if (d == 0)
      throw std::invalid_argument(
          "dependency_search: identical points cannot take different values");
    if (d == 1) {
      enforce_cap(f.queries() - start, cap, "dependency_search");
      return {diff[0], std::move(x), std::move(y), fx, fy};
    }
    // z sits half-way between: y's bits on the first floor(d/2) differing
    // positions, x's elsewhere, so |x^z| = floor(d/2), |y^z| = ceil(d/2).
    Point z = x;
    for (int i = 0; i < d / 2; ++i) z.set_bit(diff[i], y.bit(diff[i]));
    const bool fz = f.query(z);
    if (fx != fz) {
      y = std::move(z);
      fy = fz;
    } else {
      x = std::move(z);
      fx = fz;
    }
  }
}

EstimateResult dependency_estimate(BooleanOracle& f, double eps, double delta,
                                   RandomSource& rng) {
  check_params(eps, delta);
  const int n = f.arity();
  if (n == 0) return {{}, {}, 0};
  const double delta_prime = delta / n;
  const std::uint64_t cap = dependency_estimate_cap(n, eps, delta);
  const std::uint64_t start = f.queries();
  DependencySet found;
  std::vector<ArgDependencyWitness> evidence;
  for (;;) {
    const Assignment assignment = sample_assignment(found, rng);
    // constructed directly so index bookkeeping stays relative to f itself
    Restriction restricted(f, assignment);
    Verdict v = constancy_test(restricted, eps, delta_prime, rng);
    if (v.accepted) {
      const std::uint64_t used = f.queries() - start;
      enforce_cap(used, cap, "dependency_estimate");
      return {std::move(found), std::move(evidence), used};
    }
    const auto& w = std::get<NonConstancyWitness>(*v.witness);
    ArgDependencyWitness dep =
        dependency_search(restricted, w.x, w.y, w.fx, w.fy);
    const int original = restricted.original_index(dep.index);
    ArgDependencyWitness lifted{original, embed_point(dep.x, assignment),
                                embed_point(dep.y, assignment), dep.fx,
                                dep.fy};
    const auto pos = std::lower_bound(found.begin(), found.end(), original);
    evidence.insert(evidence.begin() + (pos - found.begin()),
                    std::move(lifted));
    found.insert(pos, original);
  }
}

Verdict quasisym_basic_step(BooleanOracle& f, double eps,
                            const DependencySet& dependent_args,
                            RandomSource& rng) {
  check_arg_set(dependent_args, f.arity(), "quasisym_basic_step");
  DependencySet outside;
  {
    auto it = dependent_args.begin();
    for (int i = 1; i <= f.arity(); ++i) {
      if (it != dependent_args.end() && *it == i)
        ++it;
      else
        outside.push_back(i);
    }
  }
  const Assignment assignment = sample_assignment(outside, rng);
  Restriction restricted(f, assignment);
  Verdict v = symmetry_test(restricted, eps, 0.5, rng);
  if (v.accepted) return v;
  QuasiAsymmetryWitness w{{}, assignment,
                          std::get<NonSymmetryWitness>(*v.witness)};
  return {false, std::move(w), v.queries_used};
}

Verdict quasisymmetry_test(BooleanOracle& f, double eps, double delta,
                           RandomSource& rng) {
  check_params(eps, delta);
  const double eps_prime = eps / 4.0;
  const double delta_prime = delta / 2.0;
  const std::uint64_t k = quasisym_repetitions(delta_prime);
  const std::uint64_t cap = quasisymmetry_test_cap(f.arity(), eps, delta);
  const std::uint64_t start = f.queries();
  EstimateResult estimate = dependency_estimate(f, eps_prime, delta_prime, rng);
  for (std::uint64_t i = 0; i < k; ++i) {
    Verdict step =
        quasisym_basic_step(f, eps_prime, estimate.dependent_args, rng);
    if (!step.accepted) {
      auto w = std::get<QuasiAsymmetryWitness>(std::move(*step.witness));
      w.dependencies = std::move(estimate.evidence);
      const std::uint64_t used = f.queries() - start;
      enforce_cap(used, cap, "quasisymmetry_test");
      return {false, std::move(w), used};
    }
  }
  const std::uint64_t used = f.queries() - start;
  enforce_cap(used, cap, "quasisymmetry_test");
  return {true, std::nullopt, used};
}

namespace {

bool verify_pair_arity(const BooleanOracle& f, const Point& x, const Point& y) {
  return x.arity() == f.arity() && y.arity() == f.arity();
}

bool verify_one(BooleanOracle& f, const NonSymmetryWitness& w) {
  if (!verify_pair_arity(f, w.x, w.y)) return false;
  if (w.x.weight() != w.y.weight() || w.x == w.y) return false;
  return f.query(w.x) != f.query(w.y);
}

bool verify_one(BooleanOracle& f, const NonConstancyWitness& w) {
  if (!verify_pair_arity(f, w.x, w.y)) return false;
  if (w.x == w.y) return false;
  return f.query(w.x) != f.query(w.y);
}

bool verify_one(BooleanOracle& f, const ArgDependencyWitness& w) {
  if (!verify_pair_arity(f, w.x, w.y)) return false;
  const auto [d, diff] = xor_delta(w.x, w.y);
  if (d != 1 || diff[0] != w.index) return false;
  return f.query(w.x) != f.query(w.y);
}

bool verify_one(BooleanOracle& f, const QuasiAsymmetryWitness& w) {
  const int n = f.arity();
  // dependency indices must be distinct free arguments (not fixed ones); a
  // bare basic-step witness carries no dependency evidence at all, the
  // composed test attaches one entry per estimated argument
  std::vector<bool> seen(n + 1, false);
  for (const auto& [idx, val] : w.fixing) {
    (void)val;
    if (idx < 1 || idx > n || seen[idx]) return false;
    seen[idx] = true;
  }
  for (const auto& dep : w.dependencies) {
    if (dep.index < 1 || dep.index > n || seen[dep.index]) return false;
    seen[dep.index] = true;
    if (!verify_one(f, dep)) return false;
  }
  const int reduced = n - static_cast<int>(w.fixing.size());
  if (w.pair.x.arity() != reduced || w.pair.y.arity() != reduced) return false;
  if (w.pair.x.weight() != w.pair.y.weight() || w.pair.x == w.pair.y)
    return false;
  return f.query(embed_point(w.pair.x, w.fixing)) !=
         f.query(embed_point(w.pair.y, w.fixing));
}

}  // namespace

bool verify_witness(BooleanOracle& f, const Witness& w) {
  try {
    return std::visit([&f](const auto& v) { return verify_one(f, v); }, w);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace qsym
