// Copyright 2026 The biphoton-sim authors
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

#ifndef BIPHOTON_ERRORS_HPP
#define BIPHOTON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace biphoton {

/// Base class of every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid user-supplied input (bad name, out-of-range parameter, bad grid).
struct UsageError : Error {
    using Error::Error;
};

/// A computation could not be carried out on otherwise valid input.
struct ComputeError : Error {
    using Error::Error;
};

/// File system failures while reading or writing results.
struct IoError final : Error {
    using Error::Error;
};

struct ZeroState final : ComputeError {
    using ComputeError::ComputeError;
};

struct NonUnitaryTransform final : ComputeError {
    using ComputeError::ComputeError;
};

struct ModeMismatch final : ComputeError {
    using ComputeError::ComputeError;
};

/// A state violates a structural invariant (mixed photon number,
/// mode or photon count above the configured limits, bad ensemble weights).
struct InvalidState final : ComputeError {
    using ComputeError::ComputeError;
};

struct NoSolution final : ComputeError {
    using ComputeError::ComputeError;
};

struct FitDegenerate final : ComputeError {
    using ComputeError::ComputeError;
};

struct InvalidReflectivity final : UsageError {
    using UsageError::UsageError;
};

struct InvalidOverlap final : UsageError {
    using UsageError::UsageError;
};

struct InvalidGrid final : UsageError {
    using UsageError::UsageError;
};

struct UnknownState final : UsageError {
    using UsageError::UsageError;
};

}  // namespace biphoton

#endif  // BIPHOTON_ERRORS_HPP
