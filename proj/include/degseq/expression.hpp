// Copyright 2026 The degseq Authors
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

#ifndef DEGSEQ_EXPRESSION_HPP
#define DEGSEQ_EXPRESSION_HPP

// A tiny integer expression language in one variable `x`, used to tabulate
// closed-form cost functions such as "(x-1)^2" or "x*(3-x)".
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := integer | 'x' | '(' expr ')'
//
// Division must be exact and exponents nonnegative; anything else is an error.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "degseq/error.hpp"

namespace degseq {

class ExpressionError : public InputError {
 public:
  using InputError::InputError;
};

namespace detail {

class ExpressionEvaluator {
 public:
  ExpressionEvaluator(std::string_view text, std::int64_t x) : text_(text), x_(x) {}

  std::int64_t evaluate() {
    std::int64_t value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  std::int64_t expr() {
    std::int64_t value = term();
    for (;;) {
      if (accept('+')) {
        value = checked_add(value, term());
      } else if (accept('-')) {
        value = checked_sub(value, term());
      } else {
        return value;
      }
    }
  }

  std::int64_t term() {
    std::int64_t value = unary();
    for (;;) {
      if (accept('*')) {
        value = checked_mul(value, unary());
      } else if (accept('/')) {
        std::int64_t divisor = unary();
        if (divisor == 0) fail("division by zero");
        if (value % divisor != 0)
          throw ExpressionError("expression '" + std::string(text_) +
                                "' is not an integer at x=" + std::to_string(x_));
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  std::int64_t unary() {
    if (accept('-')) return checked_sub(0, unary());
    if (accept('+')) return unary();
    return power();
  }

  std::int64_t power() {
    std::int64_t base = atom();
    if (!accept('^')) return base;
    std::int64_t exponent = unary();
    if (exponent < 0)
      throw ExpressionError("expression '" + std::string(text_) +
                            "' has a negative exponent at x=" + std::to_string(x_));
    std::int64_t result = 1;
    for (std::int64_t k = 0; k < exponent; ++k) result = checked_mul(result, base);
    return result;
  }

  std::int64_t atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == 'x' || c == 'X') {
      ++pos_;
      return x_;
    }
    if (c == '(') {
      ++pos_;
      std::int64_t value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
        ++pos_;
      }
      return value;
    }
    fail("unexpected character");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw ExpressionError(std::string(what) + " at offset " + std::to_string(pos_) +
                          " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::int64_t x_;
};

}  // namespace detail

/// Evaluates `text` at the integer point x.
inline std::int64_t evaluate_expression(std::string_view text, std::int64_t x) {
  return detail::ExpressionEvaluator(text, x).evaluate();
}

}  // namespace degseq

#endif  // DEGSEQ_EXPRESSION_HPP
