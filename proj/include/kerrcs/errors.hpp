// Copyright 2026 The kerrcs Authors
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

#ifndef KERRCS_ERRORS_HPP
#define KERRCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kerrcs {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or an argument outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series did not meet its termination criterion within the term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A truncated Fock expansion could not be certified.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A result left the representable range of double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace kerrcs

#endif  // KERRCS_ERRORS_HPP
