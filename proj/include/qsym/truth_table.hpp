#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsym/errors.hpp"
#include "qsym/oracle.hpp"
#include "qsym/point.hpp"

namespace qsym {

// Packed truth table: bit at table index idx(x) = sum_i x_i * 2^(i-1) holds
// f(x). Stored 64 entries per word, unused high bits of the last word kept
// zero. Arity is capped at 28 (32 MiB packed); formula-backed functions have
// no such cap.
class TruthTable {
 public:
  static constexpr int kMaxArity = 28;

  explicit TruthTable(int arity);

  // Materializes any evaluation rule into a table (arity cap applies).
  static TruthTable from_fn(const BoolFn& f);

  int arity() const { return arity_; }
  std::uint64_t size() const { return std::uint64_t{1} << arity_; }

  bool get(std::uint64_t idx) const {
    return (words_[idx >> 6] >> (idx & 63u)) & 1u;
  }
  void set(std::uint64_t idx, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (idx & 63u);
    if (v)
      words_[idx >> 6] |= mask;
    else
      words_[idx >> 6] &= ~mask;
  }
  void flip(std::uint64_t idx) { words_[idx >> 6] ^= std::uint64_t{1} << (idx & 63u); }

  bool eval(const Point& p) const { return get(p.index()); }

  // Number of 1-entries.
  std::uint64_t weight() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }
  friend bool operator!=(const TruthTable& a, const TruthTable& b) {
    return !(a == b);
  }

 private:
  int arity_;
  std::vector<std::uint64_t> words_;
};

// Entries on which f and g differ; arity mismatch -> usage error.
std::uint64_t xor_weight(const TruthTable& f, const TruthTable& g);

// Text format:
//   line 1: n=<decimal arity>
//   line 2: lowercase hex, ceil(2^n/4) digits, most significant digit first;
//           bit at table index i is bit (i mod 4) of hex digit floor(i/4)
//           counted from the right end of the string.
// Padding bits above 2^n (arity 0 and 1 only) must be zero. A trailing
// newline is accepted. Violations raise FormatError.
TruthTable load_truth_table(const std::string& text);
std::string store_truth_table(const TruthTable& tt);

// File helpers for the CLI.
TruthTable load_truth_table_file(const std::string& path);
void store_truth_table_file(const TruthTable& tt, const std::string& path);

// Evaluation rule backed by a truth table.
class TableFn final : public BoolFn {
 public:
  explicit TableFn(TruthTable tt) : tt_(std::move(tt)) {}
  int arity() const override { return tt_.arity(); }
  bool eval(const Point& p) const override { return tt_.eval(p); }
  const TruthTable& table() const { return tt_; }

 private:
  TruthTable tt_;
};

}  // namespace qsym
