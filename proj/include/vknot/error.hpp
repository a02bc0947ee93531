// Copyright 2026 The vknot Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vknot {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Errors caused by malformed or unsuitable user input. The CLI maps these to
/// exit code 2; every other vknot::Error is treated as an internal failure.
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class IoError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class BadIndex : public InputError {
 public:
  using InputError::InputError;
};

class NotAKnot : public InputError {
 public:
  using InputError::InputError;
};

class NoCrossings : public InputError {
 public:
  using InputError::InputError;
};

class NotApplicable : public InputError {
 public:
  using InputError::InputError;
};

class AlreadyHasOmega : public InputError {
 public:
  using InputError::InputError;
};

// Algebraic failures.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class SizeTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroSubstitution : public Error {
 public:
  using Error::Error;
};

}  // namespace vknot
