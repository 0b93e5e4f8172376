// Copyright 2026 The LambdaCC Authors
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

namespace lambdacc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. `line()` is 1-based, 0 when the error is not tied to
// a particular line (e.g. empty input).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A parameter is outside the domain an algorithm accepts (lambda range,
// epsilon range, regime preconditions).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The instance exceeds a configured size cap of an exact engine.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A labeling references pairs inconsistent with the graph.
class InvalidLabelingError : public Error {
 public:
  using Error::Error;
};

// A fractional solution violates the constraints it is claimed to satisfy.
class InfeasibleSolutionError : public Error {
 public:
  using Error::Error;
};

// The exact LP engine failed to produce a certified optimum (numerical
// breakdown; never expected on well-posed inputs).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Ratio requested against a zero lower bound with a positive objective.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

}  // namespace lambdacc
