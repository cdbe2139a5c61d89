#pragma once

#include <stdexcept>
#include <string>

namespace sinc_iterint {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A mesh that cannot be used: the rho feasibility conditions fail or
// DE nodes are not representable in double precision.
class MeshInfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// User-supplied function returned a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formula cannot handle the problem (e.g. decreasing boundary for the
// original Muhammad-Mori rule).
class UnsupportedCaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed problem description.
class ProblemError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sinc_iterint
