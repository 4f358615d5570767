#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qsym/exact.hpp"
#include "qsym/oracle.hpp"
#include "qsym/truth_table.hpp"

namespace qsym {

// Test-corpus generators. Formula families (const, dictator, parity,
// majority, threshold, sym-junta) evaluate directly and have no arity cap;
// table families (random-table, perturbed) materialize a packed table and
// inherit its cap. Content of the random families is a pure function of
// fn_seed, so a spec rebuilds the identical function everywhere.
enum class Family {
  kConst,
  kDictator,
  kParity,
  kMajority,
  kThreshold,
  kRandomTable,
  kSymJunta,
  kPerturbed,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // invalid_argument on typo

struct FunctionSpec {
  Family family = Family::kConst;
  int n = 0;
  bool value = false;                  // const: the constant
  int index = 0;                       // dictator: the decisive argument
  int threshold = 0;                   // threshold: accept weight >= t
  DependencySet args;                  // sym-junta: the arguments it uses
  std::vector<std::uint8_t> levels;    // sym-junta: value by |x_args|, size #args+1
  std::uint64_t flips = 0;             // perturbed: exact number of flipped entries
  std::uint64_t fn_seed = 0;           // random-table content / perturbed flip choice
  std::shared_ptr<FunctionSpec> base;  // perturbed: the function being perturbed

  std::string label() const;  // e.g. "parity(n=5)"
};

// Convenience constructors.
FunctionSpec const_spec(int n, bool value);
FunctionSpec dictator_spec(int n, int index);
FunctionSpec parity_spec(int n);
FunctionSpec majority_spec(int n);
FunctionSpec threshold_spec(int n, int threshold);
FunctionSpec random_table_spec(int n, std::uint64_t fn_seed);
FunctionSpec sym_junta_spec(int n, DependencySet args,
                            std::vector<std::uint8_t> levels);
FunctionSpec perturbed_spec(FunctionSpec base, std::uint64_t flips,
                            std::uint64_t fn_seed);

// Builds the deterministic evaluation rule; invalid parameters raise usage
// errors, table-backed families past the table cap raise CapacityError.
std::shared_ptr<const BoolFn> build_function(const FunctionSpec& spec);

// Packs any evaluation rule into a truth table (cap 28).
TruthTable materialize_table(const BoolFn& f);

}  // namespace qsym
