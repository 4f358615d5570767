#pragma once

#include <variant>
#include <vector>

#include "qsym/oracle.hpp"
#include "qsym/point.hpp"

namespace qsym {

// Witnesses record the bits observed at query time (fx, fy); verification
// re-queries the function rather than trusting the stored values, so the
// stored bits document the run and checking stays independent.

// Two equal-weight points claimed to take different values.
struct NonSymmetryWitness {
  Point x, y;
  bool fx = false, fy = false;
};

// Two points claimed to take different values.
struct NonConstancyWitness {
  Point x, y;
  bool fx = false, fy = false;
};

// Two points differing exactly at `index`, claimed to take different values:
// evidence that the function depends on that argument.
struct ArgDependencyWitness {
  int index = 0;
  Point x, y;
  bool fx = false, fy = false;
};

// Composite evidence against quasi-symmetry: a dependency witness for every
// estimated dependent argument, plus an equal-weight pair on the function
// restricted by `fixing` (the pair's points are at the reduced arity; they
// lift to full points through the fixing assignment).
struct QuasiAsymmetryWitness {
  std::vector<ArgDependencyWitness> dependencies;
  Assignment fixing;
  NonSymmetryWitness pair;
};

using Witness = std::variant<NonSymmetryWitness, NonConstancyWitness,
                             ArgDependencyWitness, QuasiAsymmetryWitness>;

}  // namespace qsym
