#include "qsym/families.hpp"

#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "qsym/random.hpp"

namespace qsym {

namespace {

class ConstFn final : public BoolFn {
 public:
  ConstFn(int n, bool v) : n_(n), v_(v) {}
  int arity() const override { return n_; }
  bool eval(const Point&) const override { return v_; }

 private:
  int n_;
  bool v_;
};

class DictatorFn final : public BoolFn {
 public:
  DictatorFn(int n, int index) : n_(n), index_(index) {}
  int arity() const override { return n_; }
  bool eval(const Point& p) const override { return p.bit(index_); }

 private:
  int n_, index_;
};

class ParityFn final : public BoolFn {
 public:
  explicit ParityFn(int n) : n_(n) {}
  int arity() const override { return n_; }
  bool eval(const Point& p) const override { return p.weight() & 1; }

 private:
  int n_;
};

class ThresholdFn final : public BoolFn {
 public:
  ThresholdFn(int n, int t) : n_(n), t_(t) {}
  int arity() const override { return n_; }
  bool eval(const Point& p) const override { return p.weight() >= t_; }

 private:
  int n_, t_;
};

// value = levels[|x_args|]: symmetric in the chosen arguments, ignores the
// rest, hence quasi-symmetric by construction.
class SymJuntaFn final : public BoolFn {
 public:
  SymJuntaFn(int n, DependencySet args, std::vector<std::uint8_t> levels)
      : n_(n), args_(std::move(args)), levels_(std::move(levels)) {}
  int arity() const override { return n_; }
  bool eval(const Point& p) const override {
    int w = 0;
    for (int idx : args_) w += p.bit(idx);
    return levels_[w] != 0;
  }

 private:
  int n_;
  DependencySet args_;
  std::vector<std::uint8_t> levels_;
};

TruthTable random_table(int n, std::uint64_t fn_seed) {
  TruthTable tt(n);
  RandomSource rng(fn_seed);
  for (std::uint64_t idx = 0; idx < tt.size(); ++idx)
    if (rng.next_bit()) tt.set(idx, true);
  return tt;
}

// Floyd's sampling: uniform m-subset of [0, size) in O(m) space.
std::unordered_set<std::uint64_t> pick_distinct(std::uint64_t m,
                                                std::uint64_t size,
                                                RandomSource& rng) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m);
  for (std::uint64_t j = size - m; j < size; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return chosen;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::kConst: return "const";
    case Family::kDictator: return "dictator";
    case Family::kParity: return "parity";
    case Family::kMajority: return "majority";
    case Family::kThreshold: return "threshold";
    case Family::kRandomTable: return "random-table";
    case Family::kSymJunta: return "sym-junta";
    case Family::kPerturbed: return "perturbed";
  }
  throw std::logic_error("family_name: unreachable");
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::kConst, Family::kDictator, Family::kParity,
                   Family::kMajority, Family::kThreshold, Family::kRandomTable,
                   Family::kSymJunta, Family::kPerturbed})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown function family: " + name);
}

FunctionSpec const_spec(int n, bool value) {
  FunctionSpec s;
  s.family = Family::kConst;
  s.n = n;
  s.value = value;
  return s;
}

FunctionSpec dictator_spec(int n, int index) {
  FunctionSpec s;
  s.family = Family::kDictator;
  s.n = n;
  s.index = index;
  return s;
}

FunctionSpec parity_spec(int n) {
  FunctionSpec s;
  s.family = Family::kParity;
  s.n = n;
  return s;
}

FunctionSpec majority_spec(int n) {
  FunctionSpec s;
  s.family = Family::kMajority;
  s.n = n;
  return s;
}

FunctionSpec threshold_spec(int n, int threshold) {
  FunctionSpec s;
  s.family = Family::kThreshold;
  s.n = n;
  s.threshold = threshold;
  return s;
}

FunctionSpec random_table_spec(int n, std::uint64_t fn_seed) {
  FunctionSpec s;
  s.family = Family::kRandomTable;
  s.n = n;
  s.fn_seed = fn_seed;
  return s;
}

FunctionSpec sym_junta_spec(int n, DependencySet args,
                            std::vector<std::uint8_t> levels) {
  FunctionSpec s;
  s.family = Family::kSymJunta;
  s.n = n;
  s.args = std::move(args);
  s.levels = std::move(levels);
  return s;
}

FunctionSpec perturbed_spec(FunctionSpec base, std::uint64_t flips,
                            std::uint64_t fn_seed) {
  FunctionSpec s;
  s.family = Family::kPerturbed;
  s.n = base.n;
  s.flips = flips;
  s.fn_seed = fn_seed;
  s.base = std::make_shared<FunctionSpec>(std::move(base));
  return s;
}

std::string FunctionSpec::label() const {
  const std::string head = family_name(family);
  switch (family) {
    case Family::kConst:
      return head + "(n=" + std::to_string(n) + ",v=" + (value ? "1" : "0") +
             ")";
    case Family::kDictator:
      return head + "(n=" + std::to_string(n) + ",i=" + std::to_string(index) +
             ")";
    case Family::kParity:
    case Family::kMajority:
      return head + "(n=" + std::to_string(n) + ")";
    case Family::kThreshold:
      return head + "(n=" + std::to_string(n) +
             ",t=" + std::to_string(threshold) + ")";
    case Family::kRandomTable:
      return head + "(n=" + std::to_string(n) +
             ",seed=" + std::to_string(fn_seed) + ")";
    case Family::kSymJunta: {
      std::string a, l;
      for (int idx : args) a += (a.empty() ? "" : ",") + std::to_string(idx);
      for (auto v : levels) l += v ? '1' : '0';
      return head + "(n=" + std::to_string(n) + ",args={" + a + "},levels=" +
             l + ")";
    }
    case Family::kPerturbed:
      return head + "(" + (base ? base->label() : "?") +
             ",m=" + std::to_string(flips) +
             ",seed=" + std::to_string(fn_seed) + ")";
  }
  throw std::logic_error("label: unreachable");
}

std::shared_ptr<const BoolFn> build_function(const FunctionSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("build_function: negative arity");
  switch (spec.family) {
    case Family::kConst:
      return std::make_shared<ConstFn>(spec.n, spec.value);
    case Family::kDictator:
      if (spec.index < 1 || spec.index > spec.n)
        throw std::invalid_argument("dictator: index out of range");
      return std::make_shared<DictatorFn>(spec.n, spec.index);
    case Family::kParity:
      return std::make_shared<ParityFn>(spec.n);
    case Family::kMajority:
      return std::make_shared<ThresholdFn>(spec.n, spec.n / 2 + 1);
    case Family::kThreshold:
      if (spec.threshold < 0 || spec.threshold > spec.n + 1)
        throw std::invalid_argument("threshold: t out of range");
      return std::make_shared<ThresholdFn>(spec.n, spec.threshold);
    case Family::kRandomTable:
      return std::make_shared<TableFn>(random_table(spec.n, spec.fn_seed));
    case Family::kSymJunta: {
      check_arg_set(spec.args, spec.n, "sym-junta");
      if (spec.levels.size() != spec.args.size() + 1)
        throw std::invalid_argument("sym-junta: need one level per weight");
      for (auto v : spec.levels)
        if (v > 1) throw std::invalid_argument("sym-junta: levels are bits");
      return std::make_shared<SymJuntaFn>(spec.n, spec.args, spec.levels);
    }
    case Family::kPerturbed: {
      if (!spec.base) throw std::invalid_argument("perturbed: missing base");
      if (spec.base->n != spec.n)
        throw std::invalid_argument("perturbed: base arity mismatch");
      TruthTable tt = materialize_table(*build_function(*spec.base));
      if (spec.flips > tt.size())
        throw std::invalid_argument("perturbed: more flips than entries");
      RandomSource rng(spec.fn_seed);
      for (std::uint64_t idx : pick_distinct(spec.flips, tt.size(), rng))
        tt.flip(idx);
      return std::make_shared<TableFn>(std::move(tt));
    }
  }
  throw std::logic_error("build_function: unreachable");
}

TruthTable materialize_table(const BoolFn& f) { return TruthTable::from_fn(f); }

}  // namespace qsym
