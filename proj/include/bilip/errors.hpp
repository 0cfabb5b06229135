// Copyright 2026 The bilip Authors
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

#ifndef BILIP_ERRORS_HPP
#define BILIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bilip {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameter outside the curve domain, bad interval bounds, index out of range.
struct DomainError : Error {
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

/// An iterative construction exceeded its termination guard.
struct ConvergenceError : Error {
    using Error::Error;
};

/// A pipeline stage produced values outside its accounted range.
struct AccountingError : Error {
    using Error::Error;
};

}  // namespace bilip

#endif  // BILIP_ERRORS_HPP
