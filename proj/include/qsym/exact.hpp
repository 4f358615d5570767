#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsym/errors.hpp"
#include "qsym/truth_table.hpp"

namespace qsym {

// Exact distance as a rational k/2^n. All comparisons cross-multiply in
// 128-bit arithmetic; floating point never decides a pass/fail question.
struct DistanceValue {
  std::uint64_t numerator = 0;    // minimum flip count
  std::uint64_t denominator = 1;  // 2^n

  double to_double() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }

  // value >= p/q, exactly.
  bool at_least(std::uint64_t p, std::uint64_t q) const {
    return static_cast<unsigned __int128>(numerator) * q >=
           static_cast<unsigned __int128>(p) * denominator;
  }
  bool at_most(std::uint64_t p, std::uint64_t q) const {
    return static_cast<unsigned __int128>(numerator) * q <=
           static_cast<unsigned __int128>(p) * denominator;
  }

  friend bool operator==(const DistanceValue& a, const DistanceValue& b) {
    return static_cast<unsigned __int128>(a.numerator) * b.denominator ==
           static_cast<unsigned __int128>(b.numerator) * a.denominator;
  }
  friend bool operator<(const DistanceValue& a, const DistanceValue& b) {
    return static_cast<unsigned __int128>(a.numerator) * b.denominator <
           static_cast<unsigned __int128>(b.numerator) * a.denominator;
  }
  friend bool operator<=(const DistanceValue& a, const DistanceValue& b) {
    return !(b < a);
  }
};

// distance() outcome: finite value, or the infinite sentinel for functions
// of different arities (a distinct outcome, not a number).
class Distance {
 public:
  Distance(DistanceValue v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static Distance infinite() { return Distance(); }

  bool is_infinite() const { return !v_.has_value(); }
  const DistanceValue& value() const {
    if (!v_) throw std::logic_error("Distance: value() on infinite distance");
    return *v_;
  }

 private:
  Distance() = default;
  std::optional<DistanceValue> v_;
};

// Sorted, distinct, 1-based argument indices.
using DependencySet = std::vector<int>;

// Throws std::invalid_argument unless s is sorted, distinct and within
// {1,...,n}.
void check_arg_set(const DependencySet& s, int n, const std::string& where);

// Arity caps chosen for sub-minute desk runtimes of these exponential-time
// routines.
inline constexpr int kDistSymMaxArity = 16;
inline constexpr int kDistJuntaMaxArity = 16;
inline constexpr int kDistQuasisymMaxArity = 14;
inline constexpr int kDependentSetMaxArity = 24;

// Fraction of truth-table entries on which f and g differ; infinite when the
// arities differ.
Distance distance(const TruthTable& f, const TruthTable& g);

// Exact distance to the constant functions: min(|f|, 2^n - |f|) / 2^n.
DistanceValue dist_const(const TruthTable& f);

// Exact distance to the symmetric functions: per Hamming-weight level take
// the minority count, sum, divide by 2^n (a minimum-cardinality flip set).
DistanceValue dist_sym(const TruthTable& f);

// Exact distance to the functions depending only on the arguments in J: per
// assignment to J take the minority count over the fiber, sum, divide.
DistanceValue dist_junta(const TruthTable& f, const DependencySet& J);

// Exact distance to the quasi-symmetric functions.
//
// Enumeration note: for a set J, let Sym_J be the functions constant on each
// class {x : |x_J| = w}; these are exactly the symmetric functions of the
// arguments in J. If the level map is non-constant, such a function depends
// on every argument of J (flip one J-argument at a point whose J-weight sits
// on a boundary between two differing levels), so it is quasi-symmetric with
// dependency set exactly J; a constant level map gives a constant function,
// which is quasi-symmetric too. Conversely, a quasi-symmetric function with
// dependency set J lies in Sym_J. Hence the quasi-symmetric functions are
// exactly the union of the Sym_J over all J, and the distance is the minimum
// over J of the per-class minority sum.
DistanceValue dist_quasisym(const TruthTable& f);

// Exact dependency set: { i : f(x) != f(x xor e_i) for some x }.
DependencySet dependent_set(const TruthTable& f);

}  // namespace qsym
