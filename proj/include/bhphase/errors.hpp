#pragma once

#include <stdexcept>
#include <string>

namespace bh {

/// Invalid parameter tuple or an (n, k) combination with no published system.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point outside the domain of an operation (e.g. v <= 0 for a chart map).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation called outside its hypotheses (e.g. a wave requested for c < 2).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical procedure failed to produce a result (capture failure, no front).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent solver configuration, reported before any work is done.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bh
