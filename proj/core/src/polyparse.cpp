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

#include <cctype>
#include <string>
#include <vector>

#include "fanocalc/errors.hpp"
#include "fanocalc/groups/mpoly.hpp"

namespace fanocalc::groups {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& names) : s_(text), names_(names) {}

  MPoly parse() {
    MPoly p = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + s_ + "': " + what, static_cast<long>(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc(names_.size());
    bool first = true;
    for (;;) {
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      MPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = acc * d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  MPoly power() {
    if (accept('-')) return -power();
    MPoly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  MPoly primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly(names_.size(), Cyclotomic(Rational(Integer(s_.substr(start, pos_ - start), 10))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == id) return MPoly::variable(names_.size(), i);
      }
      if (id.rfind("zeta", 0) == 0 && id.size() > 4 && id.size() < 7 &&
          id.find_first_not_of("0123456789", 4) == std::string::npos) {
        int n = std::stoi(id.substr(4));
        if (!Cyclotomic::supported_conductor(n)) fail("unsupported root of unity '" + id + "'");
        return MPoly(names_.size(), Cyclotomic::zeta(n));
      }
      pos_ = start;
      fail("unknown symbol '" + id + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string s_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

Cyclotomic parse_scalar(const std::string& text) {
  static const std::vector<std::string> none;
  MPoly p = parse_mpoly(text, none);
  return p.constant_term();
}

}  // namespace fanocalc::groups
