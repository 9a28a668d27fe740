#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: bad parameters, broken invariants, malformed descriptors.
/// The command line tool maps this to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed its own convergence contract
/// (quadrature doubling, root bracketing, ...). Exit code 3.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace rmt
