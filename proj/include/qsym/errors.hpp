#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Malformed external input: truth-table files, witness JSON.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a documented arity cap of an exponential-time routine.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsym
