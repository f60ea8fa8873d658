#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hardylab {

using cplx = std::complex<double>;

/// Argument outside the domain where a function is defined (e.g. zeta at Re s <= 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A symbol fails the class condition. Carries the witness point.
class ClassViolation : public std::invalid_argument {
 public:
  ClassViolation(const std::string& what, cplx witness)
      : std::invalid_argument(what), witness_(witness) {}
  cplx witness() const noexcept { return witness_; }

 private:
  cplx witness_;
};

/// An iterative method (root finder, quadrature, Jacobi sweeps) failed to converge.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A zero of the function being counted sits on (or numerically at) a contour edge.
class BoundaryHazard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or inline specification.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hardylab
