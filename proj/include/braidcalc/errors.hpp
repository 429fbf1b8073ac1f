#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcalc {

// Base of every error thrown by the library. Callers that only care about
// "bad input vs. bug" can catch this one type.
class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public BraidError {
 public:
  using BraidError::BraidError;
};

class StrandMismatch : public BraidError {
 public:
  StrandMismatch(int lhs, int rhs)
      : BraidError("strand-count mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class WrongStrandCount : public BraidError {
 public:
  WrongStrandCount(int expected, int got)
      : BraidError("expected a braid on " + std::to_string(expected) + " strands, got " +
                   std::to_string(got)) {}
};

// The requested destabilization does not apply to the word. This is a
// property of the word, not a malformed input.
class NotDestabilizable : public BraidError {
 public:
  using BraidError::BraidError;
};

class InvalidSplit : public BraidError {
 public:
  using BraidError::BraidError;
};

class MissingAssignment : public BraidError {
 public:
  explicit MissingAssignment(const std::string& block)
      : BraidError("no braiding assignment for block " + block) {}
};

class WidthMismatch : public BraidError {
 public:
  WidthMismatch(const std::string& block, int width, int strands)
      : BraidError("block " + block + " has width " + std::to_string(width) +
                   " but its assigned braid has " + std::to_string(strands) + " strands") {}
};

class WeightConstraintViolation : public BraidError {
 public:
  using BraidError::BraidError;
};

class InconsistentCorrespondence : public BraidError {
 public:
  using BraidError::BraidError;
};

}  // namespace braidcalc
