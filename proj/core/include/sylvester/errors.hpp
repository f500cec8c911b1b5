#pragma once

#include <stdexcept>
#include <string>

namespace sylvester {

/// Malformed or invalid input: parse failures, non-Hermitian data,
/// violated preconditions that depend on the data itself.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The pencil has deficient normal rank after removing the common kernel
/// of A and B. Only rank-aware bounds are available for such pencils.
class SingularPencilError : public InputError {
 public:
  using InputError::InputError;
};

/// An iterative routine exhausted its budget or no usable shift was found.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sylvester
