#include "qsym/truth_table.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsym {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

TruthTable::TruthTable(int arity) : arity_(arity) {
  if (arity < 0) throw std::invalid_argument("TruthTable: negative arity");
  if (arity > kMaxArity)
    throw CapacityError("TruthTable: arity " + std::to_string(arity) +
                        " exceeds cap " + std::to_string(kMaxArity));
  words_.assign((size() + 63) >> 6, 0);
}

TruthTable TruthTable::from_fn(const BoolFn& f) {
  TruthTable tt(f.arity());
  for (std::uint64_t idx = 0; idx < tt.size(); ++idx)
    if (f.eval(Point::from_index(f.arity(), idx))) tt.set(idx, true);
  return tt;
}

std::uint64_t TruthTable::weight() const {
  std::uint64_t w = 0;
  for (auto word : words_) w += std::popcount(word);
  return w;
}

std::uint64_t xor_weight(const TruthTable& f, const TruthTable& g) {
  if (f.arity() != g.arity())
    throw std::invalid_argument("xor_weight: arity mismatch");
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < f.words().size(); ++i)
    w += std::popcount(f.words()[i] ^ g.words()[i]);
  return w;
}

TruthTable load_truth_table(const std::string& text) {
  std::size_t eol = text.find('\n');
  if (eol == std::string::npos)
    throw FormatError("truth table: missing line break after header");
  const std::string header = text.substr(0, eol);
  if (header.size() < 3 || header.compare(0, 2, "n=") != 0)
    throw FormatError("truth table: header must be n=<arity>");
  int arity = 0;
  for (std::size_t i = 2; i < header.size(); ++i) {
    if (header[i] < '0' || header[i] > '9')
      throw FormatError("truth table: non-decimal arity in header");
    arity = arity * 10 + (header[i] - '0');
    if (arity > 1000) throw FormatError("truth table: arity out of range");
  }
  if (arity > TruthTable::kMaxArity)
    throw FormatError("truth table: arity " + std::to_string(arity) +
                      " exceeds cap " + std::to_string(TruthTable::kMaxArity));

  std::string hex = text.substr(eol + 1);
  while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r'))
    hex.pop_back();
  const std::uint64_t entries = std::uint64_t{1} << arity;
  const std::uint64_t expect_digits = (entries + 3) / 4;
  if (hex.size() != expect_digits)
    throw FormatError("truth table: expected " + std::to_string(expect_digits) +
                      " hex digits, got " + std::to_string(hex.size()));

  TruthTable tt(arity);
  for (std::uint64_t d = 0; d < expect_digits; ++d) {
    // digit d counted from the right end of the string
    const int v = hex_value(hex[expect_digits - 1 - d]);
    if (v < 0) throw FormatError("truth table: invalid hex digit");
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t idx = 4 * d + b;
      const bool bit = (v >> b) & 1;
      if (idx >= entries) {
        if (bit) throw FormatError("truth table: nonzero padding bits");
        continue;
      }
      if (bit) tt.set(idx, true);
    }
  }
  return tt;
}

std::string store_truth_table(const TruthTable& tt) {
  const std::uint64_t entries = tt.size();
  const std::uint64_t digits = (entries + 3) / 4;
  std::string hex(digits, '0');
  for (std::uint64_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::uint64_t idx = 4 * d + b;
      if (idx < entries && tt.get(idx)) v |= 1 << b;
    }
    hex[digits - 1 - d] = kHexDigits[v];
  }
  return "n=" + std::to_string(tt.arity()) + "\n" + hex + "\n";
}

TruthTable load_truth_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open truth table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_truth_table(buf.str());
}

void store_truth_table_file(const TruthTable& tt, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write truth table file: " + path);
  out << store_truth_table(tt);
}

}  // namespace qsym
