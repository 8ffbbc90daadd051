#pragma once

// Recursive-descent parser shared by the scalar and polynomial literal
// syntaxes. Grammar (whitespace ignored):
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (('*'|'/') power)*
//   power   := primary ['^' integer]
//   primary := integer | 'z' integer | <prefix> integer | '(' expr ')'

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "refnc/error.hpp"

namespace refnc::detail {

/// Policy must provide:
///   using value_type;
///   value_type integer(const mpz_class&);
///   value_type zeta(long n);
///   value_type variable(long index);   // 1-based; may throw
///   value_type divide(const value_type&, const value_type&);
///   value_type power(const value_type&, long);
///   std::string_view variable_prefix();
template <typename Policy>
class ExprParser {
 public:
  using value_type = typename Policy::value_type;

  ExprParser(std::string_view text, Policy policy) : policy_(std::move(policy)) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }
  }

  value_type parse() {
    if (src_.empty()) fail("empty expression");
    value_type v = expr();
    if (pos_ != src_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + src_ + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer_token() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(src_.substr(start, pos_ - start));
  }

  long small_integer() {
    mpz_class z = integer_token();
    if (!z.fits_slong_p()) fail("integer too large");
    return z.get_si();
  }

  value_type expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    value_type acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  value_type term() {
    value_type acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        acc = policy_.divide(acc, power());
      } else {
        break;
      }
    }
    return acc;
  }

  value_type power() {
    value_type base = primary();
    if (accept('^')) {
      bool negative = accept('-');
      long e = small_integer();
      return policy_.power(base, negative ? -e : e);
    }
    return base;
  }

  value_type primary() {
    if (accept('(')) {
      value_type v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      return policy_.integer(integer_token());
    }
    if (accept('z')) {
      long n = small_integer();
      if (n <= 0) fail("root of unity order must be positive");
      return policy_.zeta(n);
    }
    std::string_view prefix = policy_.variable_prefix();
    if (!prefix.empty() && std::string_view(src_).substr(pos_, prefix.size()) == prefix) {
      pos_ += prefix.size();
      long idx = small_integer();
      return policy_.variable(idx);
    }
    fail("unexpected token");
  }

  Policy policy_;
  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace refnc::detail
