#pragma once

#include <stdexcept>
#include <string>

namespace fracdim {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter lies outside the domain of the function being evaluated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// (N, k_max) or (N, kappa) violates the admissibility bound k <= ceil(N/2).
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// A 1-based sample index outside 1..N.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Least-squares fit through fewer than two distinct abscissae.
class DegenerateRegressionError : public Error {
 public:
  using Error::Error;
};

// A Higuchi subseries X(m), X(m+k), ... with no increment (q = 0).
class EmptySubseriesError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void throw_domain(const std::string& what);

}  // namespace fracdim
