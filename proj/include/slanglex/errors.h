// Copyright 2026 The SlangLex Authors.
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

#ifndef SLANGLEX_ERRORS_H_
#define SLANGLEX_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slanglex {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A raw term normalized to the empty string.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// A scale-map produced a strength outside [-2, +2], or is not monotone.
class ScaleError : public Error {
 public:
  using Error::Error;
};

// A value that must lie in [-2, +2] did not.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Errors tied to a line of an input stream. Line numbers are 1-based.
class LineError : public Error {
 public:
  LineError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ParseError : public LineError {
 public:
  using LineError::LineError;
};

class IngestError : public LineError {
 public:
  using LineError::LineError;
};

// document_strength was asked about a term the document does not contain.
class MissingTermError : public Error {
 public:
  using Error::Error;
};

// A corpus provider or entry fetcher failed.
class ProviderError : public Error {
 public:
  using Error::Error;
};

// Wraps a provider failure raised while estimating one term.
class EstimationError : public Error {
 public:
  using Error::Error;
};

class EmptyEvaluationError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration or command-line input, detected before any work.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace slanglex

#endif  // SLANGLEX_ERRORS_H_
