#pragma once

// Text input: polynomials such as "8*z^4-8*z^2+1" or "(z^2+z)^6", Laurent polynomials such as
// "z + 1/z" or "z^-2 - 3*z", and cycles given as "1,-1,1,-1".
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' exp)?
//   exp    := ['-'] integer | '(' ['-'] integer ')'
//   atom   := integer | 'z' | '(' expr ')'
//
// Implicit multiplication ("2z") is not accepted. Division is by nonzero constants only, or by
// monomials in Laurent mode; negative exponents are likewise Laurent-only.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zerocycle/cycles.hpp"
#include "zerocycle/laurent.hpp"

namespace zerocycle {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, bool laurent) : s_(text), laurent_(laurent) {}

  LaurentPoly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    LaurentPoly v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) pos_++;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      pos_++;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly v = term();
    while (true) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  LaurentPoly term() {
    LaurentPoly v = unary();
    while (true) {
      skip();
      const size_t at = pos_;
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        LaurentPoly d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (d.low() != d.high()) throw ParseError("division only by a constant or a monomial", at);
        if (d.low() != 0 && !laurent_) throw ParseError("division by z needs Laurent input", at);
        v = v * LaurentPoly::monomial(1 / d[d.low()], -d.low());
      } else {
        return v;
      }
    }
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    skip();
    const size_t at = pos_;
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool neg = accept('-');
    skip();
    const size_t num_at = pos_;
    const Integer e = integer();
    if (paren && !accept(')')) throw ParseError("expected ')' after exponent", pos_);
    if (e > 100000) throw ParseError("exponent too large", num_at);
    const unsigned k = static_cast<unsigned>(e.get_ui());
    if (!neg) return pow(base, k);
    if (!laurent_) throw ParseError("negative exponent needs Laurent input", at);
    if (base.is_zero() || base.low() != base.high()) throw ParseError("negative power of a non-monomial", at);
    const LaurentPoly inv = LaurentPoly::monomial(1 / base[base.low()], -base.low());
    return pow(inv, k);
  }

  Integer integer() {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) pos_++;
    if (start == pos_) throw ParseError("expected an integer", start);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  LaurentPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::monomial(Rational(integer()), 0);
    if (c == 'z') {
      pos_++;
      return LaurentPoly::monomial(1, 1);
    }
    if (c == '(') {
      const size_t open = pos_++;
      LaurentPoly v = expr();
      if (!accept(')')) throw ParseError("unbalanced parenthesis opened", open);
      return v;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  bool laurent_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text) {
  LaurentPoly v = detail::ExprParser(text, false).parse();
  return v.shifted_poly(0);
}

inline LaurentPoly parse_laurent(std::string_view text) { return detail::ExprParser(text, true).parse(); }

// Comma-separated integer weights.
inline ZeroCycle parse_cycle(std::string_view text) {
  std::vector<long> w;
  size_t pos = 0;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    const size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) pos++;
    const size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) pos++;
    if (digits == pos) throw ParseError("expected an integer weight", start);
    if (pos - digits > 15) throw ParseError("weight too large", start);
    w.push_back(std::stol(std::string(text.substr(start, pos - start))));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(std::string("expected ',' but found '") + text[pos] + "'", pos);
    pos++;
  }
  long sum = 0;
  for (long v : w) sum += v;
  if (sum != 0) throw ParseError("cycle weights must sum to zero (sum is " + std::to_string(sum) + ")", 0);
  return ZeroCycle(std::move(w));
}

}  // namespace zerocycle
