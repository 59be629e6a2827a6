#pragma once

#include <stdexcept>
#include <string>

namespace schurflow {

// Vector/matrix size disagreements and space mismatches.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Time not on the sampling grid, or outside the sampled window.
class AlignmentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A stated precondition failed (e.g. a kernel that is not negative definite).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Resolvent or quadrature node collides with the spectrum.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Mutually inconsistent input samples.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed run configuration; message carries the offending field path.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace schurflow
