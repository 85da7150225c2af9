#pragma once
// Error taxonomy shared by every module.
//
// validation_error: a caller violated a documented precondition (bad input,
//   malformed serialization, out-of-range parameter).  CLI exit code 1.
// ceiling_error: the input is well-formed but exceeds a hard feasibility
//   ceiling (enumeration would not terminate at desk scale).  CLI exit code 2.

#include <stdexcept>
#include <string>

namespace fibspec {

struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ceiling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fibspec
