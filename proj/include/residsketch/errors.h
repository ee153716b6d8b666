// Copyright 2026 The Residsketch Authors.
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

#ifndef RESIDSKETCH_ERRORS_H_
#define RESIDSKETCH_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace residsketch {

// Root of every error the library throws. Callers that only care about
// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range indices, non-finite values, shape mismatches.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A sketch or generator description that cannot be realized.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

// SVD or eigensolver did not converge.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Attempt to merge states built from different sketches or seeds.
class IncompatibleStates : public Error {
 public:
  using Error::Error;
};

// Residual estimation is only defined here for p > 2.
class UnsupportedP : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  // 1-based line of the offending input, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace residsketch

#endif  // RESIDSKETCH_ERRORS_H_
