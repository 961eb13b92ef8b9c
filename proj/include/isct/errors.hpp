#pragma once

#include <stdexcept>
#include <string>

namespace isct {

// Malformed or inconsistent user-supplied data (problem files, germ
// descriptions, shape mismatches). CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation refused to start because it would exceed a resource guard
// (tuple enumeration bound, search budget). CLI exit code 3.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A statement the model guarantees came out false when verified by exact
// arithmetic. Either the input violates an assumption the caller promised,
// or the model itself is inconsistent. CLI exit code 1.
class theorem_violation : public std::runtime_error {
 public:
  explicit theorem_violation(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace isct
