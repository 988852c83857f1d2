// Copyright 2026 The hadamard-toolkit Authors
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

// Text form of polynomials.
//
//   expr        := ['-'] term (('+' | '-') term)*
//   term        := factor ('*' factor)*
//   factor      := coefficient | variable ('^' uint)? | '(' expr ')'
//   coefficient := int ('/' uint)?
//
// Whitespace is insignificant and variables must match the ring's names
// exactly. The optional leading '-' lets printed output round-trip.

#ifndef HADAMARD_PARSE_HPP
#define HADAMARD_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "hadamard/arith.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/polynomial.hpp"

namespace hadamard {

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
inline bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

template <Field K>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial<K> parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Polynomial<K> p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> expr() {
    bool negate = accept('-');
    Polynomial<K> acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial<K> factor() {
    skip();
    if (pos_ == s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (digit(c)) {
      Integer num = uint_token();
      Integer den = 1;
      if (accept('/')) {
        skip();
        if (pos_ == s_.size() || !digit(s_[pos_])) throw ParseError("expected denominator", pos_);
        std::size_t at = pos_;
        den = uint_token();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational r = rat_normalize(num, den);
      return Polynomial<K>::constant(ring_, field_traits<K>::from_rational(r, ring_->field()));
    }
    if (ident_start(c)) {
      std::size_t at = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string_view name = s_.substr(at, pos_ - at);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", at);
      unsigned e = 1;
      if (accept('^')) {
        skip();
        if (pos_ == s_.size() || !digit(s_[pos_])) throw ParseError("expected exponent", pos_);
        std::size_t eat = pos_;
        Integer v = uint_token();
        if (v > Monomial::kMaxExponent) throw ParseError("exponent too large", eat);
        e = static_cast<unsigned>(v.get_ui());
      }
      return Polynomial<K>::term(ring_, field_traits<K>::one(ring_->field()),
                                 Monomial::variable(ring_->size(), *idx, e));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer uint_token() {
    std::size_t at = pos_;
    while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
    return Integer(std::string(s_.substr(at, pos_ - at)));
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

template <Field K>
std::string coeff_text(const K& c) {
  return c.to_string();
}

}  // namespace detail

template <Field K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser<K>(text, ring).parse();
}

/// Terms in descending order; unit coefficients are omitted, rationals are
/// written a/b.
template <Field K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = field_traits<K>::is_negative(t.coeff);
    K mag = neg ? -t.coeff : t.coeff;
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (t.mono.is_one() || !mag.is_one()) {
      os << detail::coeff_text(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < f.ring().size(); ++i) {
      if (!t.mono[i]) continue;
      if (wrote) os << '*';
      os << f.ring().name(i);
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

/// Rewrites typeset-style input ("2x_0x_2", "3(x0+x1)") into the strict
/// grammar: drops underscores inside identifiers, splits runs of juxtaposed
/// variable names using the ring's names (longest match first) and inserts
/// the implied '*'.
inline std::string normalize_juxtaposition(std::string_view text, const Ring& ring) {
  std::string out;
  enum class Prev { None, Operand, Operator } prev = Prev::None;
  auto emit_operand = [&](const std::string& tok) {
    if (prev == Prev::Operand) out += '*';
    out += tok;
    prev = Prev::Operand;
  };
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (detail::digit(c)) {
      std::size_t at = i;
      while (i < text.size() && detail::digit(text[i])) ++i;
      emit_operand(std::string(text.substr(at, i - at)));
      continue;
    }
    if (detail::ident_start(c)) {
      std::size_t at = i;
      while (i < text.size() && detail::ident_char(text[i])) ++i;
      std::string word;
      for (char ch : text.substr(at, i - at))
        if (ch != '_') word += ch;
      std::size_t k = 0;
      while (k < word.size()) {
        std::size_t best = 0;
        for (const auto& n : ring.names())
          if (n.size() > best && word.compare(k, n.size(), n) == 0) best = n.size();
        if (best == 0) throw ParseError("cannot split '" + word + "' into variables", at);
        emit_operand(word.substr(k, best));
        k += best;
      }
      continue;
    }
    if (c == '(') {
      if (prev == Prev::Operand) out += '*';
      out += c;
      prev = Prev::Operator;
    } else if (c == ')') {
      out += c;
      prev = Prev::Operand;
    } else if (c == '^') {
      // exponent digits attach to the preceding operand
      out += c;
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t at = i;
      while (i < text.size() && detail::digit(text[i])) ++i;
      out += std::string(text.substr(at, i - at));
      prev = Prev::Operand;
      continue;
    } else {
      out += c;
      prev = Prev::Operator;
    }
    ++i;
  }
  return out;
}

}  // namespace hadamard

#endif  // HADAMARD_PARSE_HPP
