/*
 * Copyright 2026 The isodual Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace isodual {

/// Base of every exception thrown by the core library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (field/curve specs, certificate files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A construction's hypotheses do not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A requested computation exceeds its fixed work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A check that must hold by theorem failed. Always a bug or corrupted data.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace isodual
