// Copyright 2026 The Authors.
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

#ifndef ACTSCHED_ERRORS_HPP_
#define ACTSCHED_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace actsched {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// The Gramian is not positive definite at the requested horizon, i.e. the
// system (or schedule) is not controllable.
class SingularGramian : public Error {
 public:
  using Error::Error;
};

class InvalidBudget : public Error {
 public:
  using Error::Error;
};

class MissingDesignPool : public Error {
 public:
  using Error::Error;
};

class BarrierViolation : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class NoFeasibleIndex : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidEps : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace actsched

#endif  // ACTSCHED_ERRORS_HPP_
