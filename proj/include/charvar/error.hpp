// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace chv {

// Bad input (syntax, rank, arity). Maps to CLI exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but the math refuses (reducible pair, parabolic, ...).
// Maps to CLI exit code 1.
struct MathError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace chv
