#pragma once

// Test-only brute-force oracles, kept independent of the library's own
// distance routines: these enumerate whole function classes or whole sampler
// outcome spaces and never share code with the implementation they check.

#include <bit>
#include <cstdint>
#include <vector>

#include "qsym/exact.hpp"
#include "qsym/truth_table.hpp"

namespace qsym::test {

// All 2^(n+1) symmetric functions of n arguments, one per level-value map.
inline std::vector<TruthTable> all_symmetric_tables(int n) {
  std::vector<TruthTable> out;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t levels = 0; levels < (std::uint64_t{2} << n); ++levels) {
    TruthTable tt(n);
    for (std::uint64_t idx = 0; idx < size; ++idx)
      if ((levels >> std::popcount(idx)) & 1u) tt.set(idx, true);
    out.push_back(std::move(tt));
  }
  return out;
}

// Minimum distance from f to any member of the given family.
inline DistanceValue min_distance_to(const TruthTable& f,
                                     const std::vector<TruthTable>& family) {
  std::uint64_t best = f.size() + 1;
  for (const auto& g : family) best = std::min(best, xor_weight(f, g));
  return {best, f.size()};
}

// Exact rejection probability of the two-query symmetry probe, by summing
// over its entire outcome space: x uniform off the poles, then y uniform
// over the other points of x's weight.
inline double exact_symmetry_step_rejection(const TruthTable& f) {
  const int n = f.arity();
  if (n <= 1) return 0.0;
  const std::uint64_t size = f.size();
  std::vector<std::uint64_t> level_size(n + 1, 0), level_ones(n + 1, 0);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const int w = std::popcount(idx);
    ++level_size[w];
    level_ones[w] += f.get(idx);
  }
  double p = 0.0;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const int w = std::popcount(idx);
    if (w == 0 || w == n) continue;
    const std::uint64_t disagree =
        f.get(idx) ? level_size[w] - level_ones[w] : level_ones[w];
    p += static_cast<double>(disagree) /
         static_cast<double>(level_size[w] - 1);
  }
  return p / static_cast<double>(size - 2);
}

// Same for the constancy probe: x uniform, y uniform over the rest.
inline double exact_constancy_step_rejection(const TruthTable& f) {
  const int n = f.arity();
  if (n == 0) return 0.0;
  const std::uint64_t size = f.size();
  const std::uint64_t ones = f.weight();
  // P(f(x) != f(y)) over x uniform, y uniform excluding x
  const double pairs =
      2.0 * static_cast<double>(ones) * static_cast<double>(size - ones);
  return pairs / (static_cast<double>(size) * static_cast<double>(size - 1));
}

}  // namespace qsym::test
