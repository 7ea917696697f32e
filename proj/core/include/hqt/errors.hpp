// Copyright 2026 The hybridqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace hqt {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand dimensions are incompatible (state vs state, basis vs subsystem...).
struct DimensionMismatch final : Error {
  using Error::Error;
};

// A qubit label is absent from the register it was looked up in.
struct UnknownQubit final : Error {
  using Error::Error;
};

// A forced measurement outcome has probability below the zero cutoff.
struct ZeroProbabilityOutcome final : Error {
  using Error::Error;
};

// The requested subsystem is still entangled with the rest of the register.
struct NotSeparable final : Error {
  using Error::Error;
};

// Input exceeds the documented enumeration bounds.
struct ResourceBound final : Error {
  using Error::Error;
};

// No signed Pauli product restores the target state on this branch.
struct UncorrectableBranch final : Error {
  using Error::Error;
};

// A type invariant (normalization, orthonormality, register uniqueness...)
// failed at construction time.
struct InvariantViolation final : Error {
  using Error::Error;
};

}  // namespace hqt
