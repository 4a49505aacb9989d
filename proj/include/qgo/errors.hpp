// Copyright 2026 The qgo Authors
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

namespace qgo {

/// Raised when a request exceeds what the dense engine can hold (qubit cap,
/// brute-force enumeration size).
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Raised when a caller breaks an algorithmic precondition, e.g. asking for
/// the gradient of a component that is already fixed.
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// File and serialization failures; the message always carries the path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qgo
