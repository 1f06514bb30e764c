#pragma once

#include <stdexcept>
#include <string>

namespace sympbrsk {

// Malformed or out-of-contract input (wrong shapes, non-I(d) sets, bad JSON).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

class EmptyInput : public InvalidInput {
 public:
  explicit EmptyInput(const std::string& what) : InvalidInput(what) {}
};

// A notched tableau pair that no monomial maps to.
class NotInvertible : public std::runtime_error {
 public:
  explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

// An invariant that the combinatorics guarantees was found broken.
class InternalConsistencyError : public std::logic_error {
 public:
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sympbrsk
