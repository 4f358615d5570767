#include "qsym/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace qsym {

FnOracle::FnOracle(std::shared_ptr<const BoolFn> fn) : fn_(std::move(fn)) {
  if (!fn_) throw std::invalid_argument("FnOracle: null function");
}

bool FnOracle::query(const Point& p) {
  if (p.arity() != fn_->arity())
    throw std::invalid_argument("query: point arity does not match oracle");
  ++count_;
  return fn_->eval(p);
}

Point embed_point(const Point& q, const Assignment& fixed) {
  const int n = q.arity() + static_cast<int>(fixed.size());
  Point full(n);
  for (const auto& [idx, val] : fixed) {
    if (idx < 1 || idx > n)
      throw std::invalid_argument("embed_point: fixed index out of range");
    full.set_bit(idx, val);
  }
  int next = 1;
  for (int i = 1; i <= n; ++i) {
    if (fixed.count(i)) continue;
    full.set_bit(i, q.bit(next++));
  }
  return full;
}

Restriction::Restriction(BooleanOracle& base, Assignment fixed)
    : base_(&base), fixed_(std::move(fixed)) {
  const int n = base.arity();
  for (const auto& [idx, val] : fixed_) {
    (void)val;
    if (idx < 1 || idx > n)
      throw std::invalid_argument("Restriction: fixed index out of range");
  }
  free_to_orig_.reserve(n - fixed_.size());
  scratch_ = Point(n);
  for (int i = 1; i <= n; ++i) {
    auto it = fixed_.find(i);
    if (it != fixed_.end())
      scratch_.set_bit(i, it->second);
    else
      free_to_orig_.push_back(i);
  }
}

bool Restriction::query(const Point& q) {
  if (q.arity() != arity())
    throw std::invalid_argument("query: point arity does not match oracle");
  for (std::size_t pos = 0; pos < free_to_orig_.size(); ++pos)
    scratch_.raw()[free_to_orig_[pos] - 1] = q.raw()[pos];
  return base_->query(scratch_);
}

Restriction restrict_oracle(BooleanOracle& f, const Assignment& fixed) {
  if (auto* r = dynamic_cast<Restriction*>(&f)) {
    Assignment merged = r->fixed();
    for (const auto& [reduced_idx, val] : fixed) {
      if (reduced_idx < 1 || reduced_idx > r->arity())
        throw std::invalid_argument("restrict_oracle: index out of range");
      merged[r->original_index(reduced_idx)] = val;
    }
    return Restriction(r->base(), std::move(merged));
  }
  return Restriction(f, fixed);
}

}  // namespace qsym
