#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "qsym/exact.hpp"
#include "qsym/oracle.hpp"
#include "qsym/random.hpp"
#include "qsym/samplers.hpp"
#include "qsym/witness.hpp"

namespace qsym {

// Outcome of one tester invocation. A no answer always carries a witness
// that re-verifies against the function; queries_used is the exact counter
// delta across the call.
struct Verdict {
  bool accepted = false;
  std::optional<Witness> witness;
  std::uint64_t queries_used = 0;
};

// Output of the dependency-set estimate: a set of argument indices together
// with one verifying dependency witness per index (points at full arity).
// The returned set is a subset of the true dependency set on every run.
struct EstimateResult {
  DependencySet dependent_args;
  std::vector<ArgDependencyWitness> evidence;  // parallel to dependent_args
  std::uint64_t queries_used = 0;
};

// k = ceil((1/eps) * ln(1/delta)); both parameters must lie in (0,1).
// Natural logarithm: the amplification argument needs eps*k >= ln(1/delta).
std::uint64_t repetitions(double eps, double delta);

// Smallest q with (3/2)^q >= n (exact integer arithmetic); 0 for n <= 1.
int ceil_log_three_halves(int n);

// k = ceil(log_{4/3}(1/delta_prime)) for the quasi-symmetry amplification.
std::uint64_t quasisym_repetitions(double delta_prime);

// Hard per-invocation query caps, asserted on every run via the counter.
std::uint64_t symmetry_test_cap(double eps, double delta);   // 2k
std::uint64_t constancy_test_cap(double eps, double delta);  // 2k
std::uint64_t dependency_search_cap(int arity);
std::uint64_t dependency_estimate_cap(int arity, double eps, double delta);
std::uint64_t quasisymmetry_test_cap(int arity, double eps, double delta);

// Two-query probe for symmetry: x uniform off the poles, y a distinct point
// of equal weight; rejects when the values differ. Accepts every symmetric
// function; rejects any other with probability at least its distance to the
// symmetric functions.
Verdict symmetry_basic_step(BooleanOracle& f, RandomSource& rng);

// Repeats the basic step k times, rejecting on the first no. One-sided:
// symmetric functions are always accepted; eps-far functions survive with
// probability at most (1-eps)^k <= delta.
Verdict symmetry_test(BooleanOracle& f, double eps, double delta,
                      RandomSource& rng);

// Constancy analogues (x uniform over the full cube, y over the rest).
Verdict constancy_basic_step(BooleanOracle& f, RandomSource& rng);
Verdict constancy_test(BooleanOracle& f, double eps, double delta,
                       RandomSource& rng);

// Bisection from a non-constancy witness (fx = f(x) != f(y) = fy, both
// supplied by the caller; the endpoints are never re-queried) down to a
// single-bit pair: returns a verifying dependency witness. Queries only the
// midpoint each round, at most ceil(log_{3/2} arity) in total.
ArgDependencyWitness dependency_search(BooleanOracle& f, Point x, Point y,
                                       bool fx, bool fy);

// Grows a set J of arguments the function provably depends on: restrict f by
// a fresh random assignment of J each round, test the restriction for
// constancy at confidence delta/n, and on a no run a dependency search on
// the witness to adjoin one more argument (mapped back to f's own indexing,
// witness points lifted to full arity).
EstimateResult dependency_estimate(BooleanOracle& f, double eps, double delta,
                                   RandomSource& rng);

// One probe of the quasi-symmetry test: fix a random assignment of the
// arguments outside `dependent_args` and run a symmetry test with confidence
// 1/2 on the restriction.
Verdict quasisym_basic_step(BooleanOracle& f, double eps,
                            const DependencySet& dependent_args,
                            RandomSource& rng);

// Full quasi-symmetry test: dependency estimate at (eps/4, delta/2), then
// ceil(log_{4/3}(2/delta)) basic steps at eps/4 over the estimated set.
Verdict quasisymmetry_test(BooleanOracle& f, double eps, double delta,
                           RandomSource& rng);

// Re-checks a witness with fresh queries: true iff the structural claims
// hold and every claimed value inequality is confirmed by f. Malformed
// witnesses return false, never throw.
bool verify_witness(BooleanOracle& f, const Witness& w);

}  // namespace qsym
