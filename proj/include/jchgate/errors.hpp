// Copyright 2026 The jchgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace jchgate {

/// Violated physics precondition: bad schedule timing, non-Hermitian
/// generator, basis mismatch. The CLI maps these to exit status 1.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A symbolic trace reached a configuration the phase bookkeeping forbids.
class TraceInvalid : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Jump window too long compared to the single-excitation Rabi period.
class TimingWarning : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Argument outside its mathematical domain (atom outside the cavity, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Query for a state that is not part of a basis.
class InvalidQuery : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Malformed or schema-violating configuration / data file (exit status 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jchgate
