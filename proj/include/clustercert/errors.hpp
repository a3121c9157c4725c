// Copyright 2026 The clustercert Authors
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
#include <string>

namespace clustercert {

/// Base class of every error raised by the library. `exit_code()` is the
/// process status the CLI reports for it.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 2; }
};

/// A precondition on an argument's value was violated.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Operands disagree on qubit count or shape.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A requested computation exceeds the configured dense-simulation limit.
class ResourceError : public Error {
   public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

/// A measurement branch with (numerically) zero probability was requested.
class ImpossibleOutcomeError : public Error {
   public:
    using Error::Error;
};

/// A two-qubit operator is not Hermitian, unit-trace and positive semidefinite.
class InvalidStateError : public Error {
   public:
    using Error::Error;
};

/// Three correlator values cannot come from any physical state.
class InconsistentCorrelatorsError : public Error {
   public:
    using Error::Error;
};

/// The worst-case mixture does not exist for the requested (z, n).
class NoWcStateError : public DomainError {
   public:
    using DomainError::DomainError;
};

/// Not enough complete coincidences to form an estimate.
class InsufficientDataError : public Error {
   public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

}  // namespace clustercert
