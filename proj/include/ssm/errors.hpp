#pragma once

#include <stdexcept>
#include <string>

namespace ssm {

// Malformed or contract-violating input (duplicate digits, bad weights, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Input outside the supported problem class (five or more digits, overflow).
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

// A constructed certificate failed its own exact verification.
class InternalInconsistency : public std::logic_error {
 public:
  explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

// Iterated spectrum sums collided, so the truncation is not a set of (#L)^n points.
class DegenerateTriple : public std::runtime_error {
 public:
  explicit DegenerateTriple(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ssm
