#pragma once

#include <stdexcept>
#include <string>

namespace swarmnet {

// Invalid or infeasible configuration (bad field, impossible topology, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments or data handed to an operation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical domain violation, e.g. a complex-valued constriction factor.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failure while a run is executing (non-finite fitness, I/O failure).
class RunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swarmnet
