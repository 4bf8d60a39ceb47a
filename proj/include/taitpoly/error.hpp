// Copyright 2026 The taitpoly Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taitpoly {

/// Base class of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (PD text, JSON, edge labels).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be tokenized or parsed. Carries a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(what + " (line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The diagram or graph is not connected where connectivity is required.
class DisconnectedError : public InputError {
 public:
  using InputError::InputError;
};

/// An edge id that does not belong to the host map.
class UnknownEdgeError : public InputError {
 public:
  using InputError::InputError;
};

/// A brute-force routine was asked to run on an instance above its cap.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": " + std::to_string(size) + " edges exceeds cap of " +
              std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// A computed identity that must hold did not (internal inconsistency).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace taitpoly
