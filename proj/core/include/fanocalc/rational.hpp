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

#ifndef FANOCALC_RATIONAL_HPP_
#define FANOCALC_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fanocalc {

// Exact rational number. GMP keeps the value canonical: positive
// denominator and coprime numerator/denominator after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q" (surrounding whitespace allowed).
// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace fanocalc

#endif  // FANOCALC_RATIONAL_HPP_
