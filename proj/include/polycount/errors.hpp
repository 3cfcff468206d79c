// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polycount {

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State-space or work cap exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request outside the validity range of a recurrence.
struct RangeError : std::domain_error {
  using std::domain_error::domain_error;
};

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace polycount
