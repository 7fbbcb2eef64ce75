// Copyright 2026 The fanocalc Authors
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

#ifndef FANOCALC_ERRORS_HPP_
#define FANOCALC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fanocalc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FANOCALC_DEFINE_ERROR(Name)   \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  };

FANOCALC_DEFINE_ERROR(DimensionMismatch)
FANOCALC_DEFINE_ERROR(DomainError)
FANOCALC_DEFINE_ERROR(NotPseudoeffective)
FANOCALC_DEFINE_ERROR(SingularGram)
FANOCALC_DEFINE_ERROR(IrrationalWall)
FANOCALC_DEFINE_ERROR(NotInvariant)
FANOCALC_DEFINE_ERROR(UnsupportedAction)
FANOCALC_DEFINE_ERROR(InconsistentWithLefschetz)
FANOCALC_DEFINE_ERROR(ValidationError)

#undef FANOCALC_DEFINE_ERROR

// Raised while reading catalog text; carries a byte offset when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long position = -1)
      : Error(position >= 0 ? what + " (at offset " + std::to_string(position) + ")" : what),
        position_(position) {}
  long position() const { return position_; }

 private:
  long position_;
};

}  // namespace fanocalc

#endif  // FANOCALC_ERRORS_HPP_
