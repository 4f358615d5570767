#include "qsym/samplers.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace qsym {

Point sample_any(int n, RandomSource& rng) {
  Point p(n);
  for (int i = 0; i < n; ++i) p.raw()[i] = rng.next_bit();
  return p;
}

Point sample_excluding(const Point& x, RandomSource& rng) {
  if (x.arity() < 1)
    throw std::invalid_argument("sample_excluding: arity must be >= 1");
  for (;;) {
    Point p = sample_any(x.arity(), rng);
    if (p != x) return p;
  }
}

Point sample_excluding_poles(int n, RandomSource& rng) {
  if (n < 2)
    throw std::invalid_argument("sample_excluding_poles: arity must be >= 2");
  for (;;) {
    Point p = sample_any(n, rng);
    const int w = p.weight();
    if (w != 0 && w != n) return p;
  }
}

Point sample_same_weight_excluding(const Point& x, RandomSource& rng) {
  const int n = x.arity();
  const int w = x.weight();
  if (w < 1 || w > n - 1)
    throw std::invalid_argument(
        "sample_same_weight_excluding: weight must be in [1, n-1]");
  std::vector<int> pos(n);
  for (;;) {
    std::iota(pos.begin(), pos.end(), 0);
    // partial Fisher-Yates: first w slots become a uniform w-subset
    for (int i = 0; i < w; ++i) {
      const int j = i + static_cast<int>(rng.below(n - i));
      std::swap(pos[i], pos[j]);
    }
    Point y(n);
    for (int i = 0; i < w; ++i) y.raw()[pos[i]] = 1;
    if (y != x) return y;
  }
}

Assignment sample_assignment(const DependencySet& s, RandomSource& rng) {
  Assignment a;
  for (int idx : s) a.emplace(idx, rng.next_bit());
  return a;
}

}  // namespace qsym
