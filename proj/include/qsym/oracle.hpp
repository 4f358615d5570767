#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "qsym/point.hpp"

namespace qsym {

// Partial assignment of argument values: 1-based argument index -> bit.
// std::map keeps the keys sorted, which fixes the draw and embedding order.
using Assignment = std::map<int, bool>;

// A Boolean function as a pure evaluation rule. Implementations must be
// deterministic: eval at the same point always returns the same bit.
class BoolFn {
 public:
  virtual ~BoolFn() = default;
  virtual int arity() const = 0;
  virtual bool eval(const Point& p) const = 0;
};

// Query access to a Boolean function with mandatory query accounting: every
// query() call charges exactly one unit, repeated points included (the
// bounds proved for the testers count queries made, not distinct points).
// The counter is a plain integer: an oracle is owned by one tester
// invocation at a time; parallel experiments instantiate one oracle per
// trial and merge tallies afterwards.
class BooleanOracle {
 public:
  virtual ~BooleanOracle() = default;
  virtual int arity() const = 0;
  // Evaluates f at p and charges one query. Arity mismatch -> usage error.
  virtual bool query(const Point& p) = 0;
  // Total queries charged so far (a restriction charges its base function).
  virtual std::uint64_t queries() const = 0;
};

// Plain counting oracle over an evaluation rule.
class FnOracle final : public BooleanOracle {
 public:
  explicit FnOracle(std::shared_ptr<const BoolFn> fn);
  int arity() const override { return fn_->arity(); }
  bool query(const Point& p) override;
  std::uint64_t queries() const override { return count_; }

 private:
  std::shared_ptr<const BoolFn> fn_;
  std::uint64_t count_ = 0;
};

// Full point agreeing with `fixed` on its keys and taking q's bits on the
// remaining arguments in increasing index order. The inverse of restriction;
// lifts witness points found on a restricted function back to full arity.
Point embed_point(const Point& q, const Assignment& fixed);

// The function obtained by substituting fixed values for a subset of
// arguments. Evaluating the restriction at a reduced point evaluates the
// base at the embedded full point and charges the base's counter. Reduced
// positions map to original indices in strictly increasing order.
class Restriction final : public BooleanOracle {
 public:
  Restriction(BooleanOracle& base, Assignment fixed);

  int arity() const override { return static_cast<int>(free_to_orig_.size()); }
  bool query(const Point& q) override;
  std::uint64_t queries() const override { return base_->queries(); }

  // Original 1-based argument index of reduced position i (1-based).
  int original_index(int reduced_index) const {
    return free_to_orig_.at(reduced_index - 1);
  }
  const Assignment& fixed() const { return fixed_; }
  BooleanOracle& base() const { return *base_; }

 private:
  BooleanOracle* base_;
  Assignment fixed_;                // keys are original indices
  std::vector<int> free_to_orig_;   // reduced position (0-based) -> original index
  Point scratch_;                   // full-arity buffer reused per query
};

// Restriction factory. Restricting a Restriction folds both maps into a
// single fixed-map over the original function, so witness lifting is always
// a single embed step; `fixed` is interpreted in f's own argument indexing.
Restriction restrict_oracle(BooleanOracle& f, const Assignment& fixed);

}  // namespace qsym
