#pragma once

#include <stdexcept>
#include <string>

namespace minsurf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameter outside the domain of a curve or sampled solution.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Frenet frame undefined (zero curvature).
class DegenerateFrameError : public Error {
 public:
  using Error::Error;
};

/// Invalid constructor or operation parameter (e.g. |c| > 1).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Metric determinant below the regularity threshold, or zero normal.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Inputs that disagree with each other (e.g. curve vs ODE curvature).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Integration produced a non-finite state.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed command-line or file input.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace minsurf
