/*
   Copyright 2026 The soca-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SOCA_ERRORS_HPP
#define SOCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace soca {

/// Mathematically undefined request (inverse of zero, gcd(0, 0), ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Caller violated an operation's precondition (bad shape, non-bipermutive rule, ...).
class PreconditionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Requested work exceeds the desk-scale limits; callers may opt out explicitly.
class ScaleGuardError : public PreconditionError {
   public:
    using PreconditionError::PreconditionError;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree did not. Always an implementation bug.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace soca

#endif
