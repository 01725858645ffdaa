// Copyright 2026 The otsyl Authors
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

#ifndef OTSYL_ERRORS_H_
#define OTSYL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace otsyl {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Alphabet configuration errors.
class MalformedConfig : public Error {
 public:
  using Error::Error;
};
class OverlappingClasses : public Error {
 public:
  using Error::Error;
};
class EmptyClass : public Error {
 public:
  using Error::Error;
};

// Input classification errors.
class UnknownSymbol : public Error {
 public:
  UnknownSymbol(const std::string& msg, int index) : Error(msg), index(index) {}
  int index;
};
class EmptyWord : public Error {
 public:
  using Error::Error;
};
class EmptyInput : public Error {
 public:
  using Error::Error;
};

// A label string that does not describe a legal syllabification.
class IllFormedParse : public Error {
 public:
  using Error::Error;
};

// A residual grid with no legal completion. Not reachable through the
// engine loop; signals direct misuse or an internal pruning bug.
class NoWellFormedCompletion : public Error {
 public:
  using Error::Error;
};

// Exhaustive evaluation refused: the input exceeds the configured cap.
class InputTooLong : public Error {
 public:
  using Error::Error;
};

// Command-line / argument errors (exit status 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace otsyl

#endif  // OTSYL_ERRORS_H_
