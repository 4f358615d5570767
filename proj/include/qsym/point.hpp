#pragma once

#include <boost/container/small_vector.hpp>

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsym {

// Argument indices are 1-based throughout the library: "argument i" means
// i in {1,...,n}. Two fixed conventions, documented side by side:
//
//   table index   idx(x) = sum_i x_i * 2^(i-1)   (argument 1 = least
//                 significant bit; used by TruthTable and the file format)
//   display       bitstrings are written argument 1 leftmost, e.g. the
//                 point (x1,x2,x3) = (1,0,1) prints as "101"
//
// The inline buffer keeps points of arity <= 40 off the heap; formula-backed
// functions of larger arity spill over transparently.
class Point {
 public:
  using Bits = boost::container::small_vector<std::uint8_t, 40>;

  Point() = default;
  explicit Point(int arity) : bits_(check_arity(arity), 0) {}

  static Point all_zeros(int arity) { return Point(arity); }

  static Point all_ones(int arity) {
    Point p(arity);
    for (auto& b : p.bits_) b = 1;
    return p;
  }

  // Point whose table index is idx; requires arity <= 63 and idx < 2^arity.
  static Point from_index(int arity, std::uint64_t idx) {
    if (arity > 63 || (arity < 63 && (idx >> arity) != 0))
      throw std::invalid_argument("Point::from_index: index out of range");
    Point p(arity);
    for (int i = 0; i < arity; ++i) p.bits_[i] = (idx >> i) & 1u;
    return p;
  }

  static Point from_bits(std::initializer_list<int> bits) {
    Point p(static_cast<int>(bits.size()));
    int i = 0;
    for (int b : bits) p.bits_[i++] = b ? 1 : 0;
    return p;
  }

  // Parses the display form: '0'/'1' characters, argument 1 leftmost.
  static Point parse(const std::string& s) {
    Point p(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw std::invalid_argument("Point::parse: expected only '0'/'1'");
      p.bits_[i] = s[i] == '1';
    }
    return p;
  }

  int arity() const { return static_cast<int>(bits_.size()); }

  // Value of argument i, 1-based.
  bool bit(int i) const {
    assert(i >= 1 && i <= arity());
    return bits_[i - 1] != 0;
  }

  void set_bit(int i, bool v) {
    assert(i >= 1 && i <= arity());
    bits_[i - 1] = v ? 1 : 0;
  }

  int weight() const {
    int w = 0;
    for (auto b : bits_) w += b;
    return w;
  }

  // Table index; requires arity <= 63.
  std::uint64_t index() const {
    assert(arity() <= 63);
    std::uint64_t idx = 0;
    for (int i = arity() - 1; i >= 0; --i) idx = (idx << 1) | bits_[i];
    return idx;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) s[i] = '1';
    return s;
  }

  // Raw 0-based storage: position p holds argument p+1.
  Bits& raw() { return bits_; }
  const Bits& raw() const { return bits_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

 private:
  static int check_arity(int arity) {
    if (arity < 0) throw std::invalid_argument("Point: negative arity");
    return arity;
  }

  Bits bits_;
};

inline int weight(const Point& p) { return p.weight(); }

// Number of coordinates on which x and y differ, plus their sorted 1-based
// indices.
inline std::pair<int, std::vector<int>> xor_delta(const Point& x,
                                                  const Point& y) {
  if (x.arity() != y.arity())
    throw std::invalid_argument("xor_delta: arity mismatch");
  std::vector<int> diff;
  for (int i = 1; i <= x.arity(); ++i)
    if (x.bit(i) != y.bit(i)) diff.push_back(i);
  return {static_cast<int>(diff.size()), std::move(diff)};
}

}  // namespace qsym
