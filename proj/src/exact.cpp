#include "qsym/exact.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qsym {

namespace {

void check_cap(const TruthTable& f, int cap, const char* what) {
  if (f.arity() > cap)
    throw CapacityError(std::string(what) + ": arity " +
                        std::to_string(f.arity()) + " exceeds cap " +
                        std::to_string(cap));
}

// Minority flip count per class of a partition encoded as class id per index.
std::uint64_t minority_sum(const TruthTable& f, const std::vector<int>& cls,
                           int num_classes) {
  std::vector<std::uint64_t> ones(num_classes, 0), total(num_classes, 0);
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    ++total[cls[idx]];
    ones[cls[idx]] += f.get(idx);
  }
  std::uint64_t sum = 0;
  for (int c = 0; c < num_classes; ++c)
    sum += std::min(ones[c], total[c] - ones[c]);
  return sum;
}

}  // namespace

void check_arg_set(const DependencySet& s, int n, const std::string& where) {
  int prev = 0;
  for (int idx : s) {
    if (idx <= prev)
      throw std::invalid_argument(where + ": indices must be sorted, distinct");
    if (idx > n) throw std::invalid_argument(where + ": index out of range");
    prev = idx;
  }
}

Distance distance(const TruthTable& f, const TruthTable& g) {
  if (f.arity() != g.arity()) return Distance::infinite();
  return DistanceValue{xor_weight(f, g), f.size()};
}

DistanceValue dist_const(const TruthTable& f) {
  const std::uint64_t w = f.weight();
  return {std::min(w, f.size() - w), f.size()};
}

DistanceValue dist_sym(const TruthTable& f) {
  check_cap(f, kDistSymMaxArity, "dist_sym");
  std::vector<int> cls(f.size());
  for (std::uint64_t idx = 0; idx < f.size(); ++idx)
    cls[idx] = std::popcount(idx);
  return {minority_sum(f, cls, f.arity() + 1), f.size()};
}

DistanceValue dist_junta(const TruthTable& f, const DependencySet& J) {
  check_cap(f, kDistJuntaMaxArity, "dist_junta");
  check_arg_set(J, f.arity(), "dist_junta");
  // fiber id = bits of x restricted to J, packed densely
  std::vector<int> cls(f.size());
  for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
    int id = 0;
    for (std::size_t j = 0; j < J.size(); ++j)
      id |= static_cast<int>((idx >> (J[j] - 1)) & 1u) << j;
    cls[idx] = id;
  }
  return {minority_sum(f, cls, 1 << J.size()), f.size()};
}

DistanceValue dist_quasisym(const TruthTable& f) {
  check_cap(f, kDistQuasisymMaxArity, "dist_quasisym");
  const int n = f.arity();
  const std::uint64_t size = f.size();
  std::uint64_t best = size;  // flipping everything is never optimal but safe
  std::vector<std::uint64_t> ones(n + 1), total(n + 1);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    const int levels = std::popcount(mask) + 1;
    std::fill(ones.begin(), ones.begin() + levels, 0);
    std::fill(total.begin(), total.begin() + levels, 0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      const int w = std::popcount(idx & mask);
      ++total[w];
      ones[w] += f.get(idx);
    }
    std::uint64_t sum = 0;
    for (int w = 0; w < levels; ++w)
      sum += std::min(ones[w], total[w] - ones[w]);
    best = std::min(best, sum);
    if (best == 0) break;
  }
  return {best, size};
}

DependencySet dependent_set(const TruthTable& f) {
  check_cap(f, kDependentSetMaxArity, "dependent_set");
  static constexpr std::uint64_t kLowHalf[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0f0f0f0f0f0f0f0fULL,
      0x00ff00ff00ff00ffULL, 0x0000ffff0000ffffULL, 0x00000000ffffffffULL};
  const auto& words = f.words();
  DependencySet deps;
  for (int i = 1; i <= f.arity(); ++i) {
    const int b = i - 1;
    bool depends = false;
    if (b < 6) {
      // compare each word against itself shifted by 2^b
      const int shift = 1 << b;
      for (auto w : words)
        if (((w ^ (w >> shift)) & kLowHalf[b]) != 0) {
          depends = true;
          break;
        }
    } else {
      const std::size_t stride = std::size_t{1} << (b - 6);
      for (std::size_t k = 0; k < words.size() && !depends; ++k)
        if ((k & stride) == 0 && words[k] != words[k | stride]) depends = true;
    }
    if (depends) deps.push_back(i);
  }
  return deps;
}

}  // namespace qsym
