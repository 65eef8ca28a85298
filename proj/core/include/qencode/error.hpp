// Copyright 2026 The qencode Authors
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

#include <optional>
#include <stdexcept>
#include <string>

namespace qencode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An input object violates one of its invariants. `field()` names the
/// offending field (e.g. "povm" or "states[2]") and `residual()` carries the
/// measured violation when one is meaningful.
class ValidationError : public Error {
   public:
    ValidationError(std::string field, const std::string &message,
                    std::optional<double> residual = std::nullopt)
        : Error(field.empty() ? message : field + ": " + message),
          field_(std::move(field)),
          residual_(residual) {}

    const std::string &field() const noexcept { return field_; }
    std::optional<double> residual() const noexcept { return residual_; }

   private:
    std::string field_;
    std::optional<double> residual_;
};

/// Vectors whose outer products do not resolve the identity.
class NotTightFrameError : public ValidationError {
   public:
    NotTightFrameError(std::string field, double residual);
};

/// Requested design does not exist (norm profile fails majorization,
/// more dimensions than symbols, ...).
class InfeasibleError : public Error {
   public:
    using Error::Error;
};

/// A posterior quantity was requested for an outcome that never occurs.
class IllDefinedError : public Error {
   public:
    using Error::Error;
};

}  // namespace qencode
