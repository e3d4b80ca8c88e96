#pragma once

#include <stdexcept>
#include <string>

namespace movcone {

// Domain failures. Outcomes that enumeration code must branch on
// (no solution, degenerate ray, unknown constant) are values, not errors.
class Error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class PerfectSquare : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ExhaustedCases : public Error {
 public:
  using Error::Error;
};

class InfeasibleN : public Error {
 public:
  using Error::Error;
};

class MissingPhi : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInput(message);
}

}  // namespace movcone
