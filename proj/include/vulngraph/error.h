// Copyright 2026 The VulnGraph Authors. All Rights Reserved.
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
//
// Exception hierarchy shared by all vulngraph modules.

#ifndef VULNGRAPH_ERROR_H_
#define VULNGRAPH_ERROR_H_

#include <stdexcept>
#include <string>

namespace vulngraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error tied to a position in some text input. Line and column are 1-based;
// zero means "unknown".
class PositionedError : public Error {
 public:
  PositionedError(const std::string& what, int line, int column)
      : Error(Format(what, line, column)),
        message_(what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }
  // The description without the position prefix.
  const std::string& message() const { return message_; }

 private:
  static std::string Format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::string message_;
  int line_;
  int column_;
};

class LexError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

class SyntaxError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

// switch/goto/do and friends are outside the accepted subset.
class UnsupportedConstructError : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// Unbalanced braces while splitting a translation unit.
class StructuralError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

class DotParseError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

// NaN or Inf produced by a numeric kernel.
class NumericError : public Error {
 public:
  using Error::Error;
};

class EmptyVocabularyError : public Error {
 public:
  using Error::Error;
};

class DatasetError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace vulngraph

#endif  // VULNGRAPH_ERROR_H_
