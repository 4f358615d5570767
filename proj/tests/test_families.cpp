#include "qsym/families.hpp"

#include "gtest/gtest.h"
#include "qsym/exact.hpp"
#include "qsym/testers.hpp"

namespace qsym {
namespace {

TEST(Families, FormulaEvaluations) {
  const auto dict = build_function(dictator_spec(5, 3));
  EXPECT_TRUE(dict->eval(Point::from_bits({0, 0, 1, 0, 0})));
  EXPECT_FALSE(dict->eval(Point::from_bits({1, 1, 0, 1, 1})));

  const auto par = build_function(parity_spec(4));
  EXPECT_TRUE(par->eval(Point::from_bits({1, 0, 0, 0})));
  EXPECT_FALSE(par->eval(Point::from_bits({1, 1, 0, 0})));

  const auto maj = build_function(majority_spec(3));
  EXPECT_TRUE(maj->eval(Point::from_bits({1, 1, 0})));
  EXPECT_FALSE(maj->eval(Point::from_bits({1, 0, 0})));

  const auto thr = build_function(threshold_spec(4, 1));
  EXPECT_TRUE(thr->eval(Point::from_bits({0, 0, 0, 1})));  // an OR gate
  EXPECT_FALSE(thr->eval(Point::from_bits({0, 0, 0, 0})));

  const auto c1 = build_function(const_spec(0, true));
  EXPECT_TRUE(c1->eval(Point(0)));
}

TEST(Families, SymJuntaDependsExactlyOnItsArguments) {
  const auto fn = build_function(sym_junta_spec(6, {1, 4}, {0, 1, 0}));
  // value is 1 iff exactly one of arguments 1 and 4 is set
  EXPECT_TRUE(fn->eval(Point::from_bits({1, 0, 0, 0, 0, 0})));
  EXPECT_TRUE(fn->eval(Point::from_bits({0, 1, 1, 1, 1, 1})));
  EXPECT_FALSE(fn->eval(Point::from_bits({1, 0, 0, 1, 0, 0})));
  EXPECT_EQ(dependent_set(materialize_table(*fn)), (DependencySet{1, 4}));
}

TEST(Families, SymJuntaIsAcceptedByTheQuasiSymmetryTest) {
  FnOracle f(build_function(sym_junta_spec(6, {1, 4}, {0, 1, 0})));
  for (std::uint64_t s = 0; s < 60; ++s) {
    RandomSource rng(s);
    EXPECT_TRUE(quasisymmetry_test(f, 0.2, 0.1, rng).accepted);
  }
}

TEST(Families, PerturbedDiffersOnExactlyTheFlipCount) {
  const TruthTable base = materialize_table(*build_function(parity_spec(4)));
  for (std::uint64_t m : {0ULL, 2ULL, 7ULL, 16ULL}) {
    const TruthTable noisy = materialize_table(
        *build_function(perturbed_spec(parity_spec(4), m, 13)));
    EXPECT_EQ(distance(base, noisy).value(), (DistanceValue{m, 16}));
  }
}

TEST(Families, RandomTableIsAPureFunctionOfTheSeed) {
  const TruthTable a =
      materialize_table(*build_function(random_table_spec(8, 5)));
  const TruthTable b =
      materialize_table(*build_function(random_table_spec(8, 5)));
  const TruthTable c =
      materialize_table(*build_function(random_table_spec(8, 6)));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Families, InvalidParametersAreUsageErrors) {
  EXPECT_THROW(build_function(dictator_spec(3, 0)), std::invalid_argument);
  EXPECT_THROW(build_function(dictator_spec(3, 4)), std::invalid_argument);
  EXPECT_THROW(build_function(threshold_spec(3, 5)), std::invalid_argument);
  EXPECT_THROW(build_function(sym_junta_spec(3, {1, 2}, {0, 1})),
               std::invalid_argument);  // needs #args+1 levels
  EXPECT_THROW(build_function(sym_junta_spec(3, {4}, {0, 1})),
               std::invalid_argument);
  EXPECT_THROW(build_function(perturbed_spec(parity_spec(3), 9, 0)),
               std::invalid_argument);  // more flips than entries
  FunctionSpec orphan;
  orphan.family = Family::kPerturbed;
  orphan.n = 3;
  EXPECT_THROW(build_function(orphan), std::invalid_argument);
  EXPECT_THROW(build_function(random_table_spec(29, 0)), CapacityError);
}

TEST(Families, NamesRoundTrip) {
  for (Family f : {Family::kConst, Family::kDictator, Family::kParity,
                   Family::kMajority, Family::kThreshold, Family::kRandomTable,
                   Family::kSymJunta, Family::kPerturbed})
    EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_THROW(family_from_name("nope"), std::invalid_argument);
}

TEST(Families, Labels) {
  EXPECT_EQ(parity_spec(5).label(), "parity(n=5)");
  EXPECT_EQ(dictator_spec(4, 2).label(), "dictator(n=4,i=2)");
  EXPECT_EQ(sym_junta_spec(6, {1, 4}, {0, 1, 0}).label(),
            "sym-junta(n=6,args={1,4},levels=010)");
  EXPECT_EQ(perturbed_spec(parity_spec(4), 2, 9).label(),
            "perturbed(parity(n=4),m=2,seed=9)");
}

}  // namespace
}  // namespace qsym
