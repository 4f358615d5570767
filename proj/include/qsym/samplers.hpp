#pragma once

#include "qsym/exact.hpp"
#include "qsym/oracle.hpp"
#include "qsym/point.hpp"
#include "qsym/random.hpp"

namespace qsym {

// The exact distributions the basic steps draw from. Bits are drawn for
// argument 1 first; every draw order is part of the replay contract.

// Uniform over {0,1}^n.
Point sample_any(int n, RandomSource& rng);

// Uniform over the 2^n - 1 points other than x; requires arity >= 1.
// Rejection from the full cube (acceptance probability >= 1/2).
Point sample_excluding(const Point& x, RandomSource& rng);

// Uniform over the 2^n - 2 points other than all-zeros and all-ones;
// requires n >= 2. Rejection from the full cube.
Point sample_excluding_poles(int n, RandomSource& rng);

// Uniform over the C(n,|x|) - 1 points of x's Hamming weight other than x;
// requires 1 <= |x| <= n-1. Draws a uniform |x|-subset of positions by
// partial shuffle and retries on the single collision x (retry probability
// 1/C(n,|x|) <= 1/n).
Point sample_same_weight_excluding(const Point& x, RandomSource& rng);

// Uniform over the 2^#S assignments of the arguments in S (ascending index
// order; S may be empty).
Assignment sample_assignment(const DependencySet& s, RandomSource& rng);

}  // namespace qsym
