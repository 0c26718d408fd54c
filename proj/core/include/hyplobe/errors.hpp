#pragma once

#include <stdexcept>
#include <string>

namespace hyplobe {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Coincident points, collinear triangles and similar zero-content inputs.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// A root or optimum could not be bracketed.
class SolverError : public Error {
 public:
  using Error::Error;
};

// A side/angle walk failed to close within tolerance.
class ClosureError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyplobe
