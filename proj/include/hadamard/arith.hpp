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

// Exact coefficient arithmetic: rationals (GMP-backed) and prime-field
// residues, plus the traits the polynomial layer uses to stay generic.

#ifndef HADAMARD_ARITH_HPP
#define HADAMARD_ARITH_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>

#include "hadamard/errors.hpp"

namespace hadamard {

using Integer = mpz_class;

/// Normalized rational number: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& v) : q_(v) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const noexcept { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / q_);
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

/// num/den in lowest terms with a positive denominator.
inline Rational rat_normalize(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  mpq_class q(num, den);
  return Rational(std::move(q));
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Residue modulo a prime p < 2^32. The modulus travels with the value so a
/// mismatch between two operands is detected rather than silently mixed.
class PrimeFieldElement {
 public:
  PrimeFieldElement() = default;
  PrimeFieldElement(std::int64_t v, std::uint64_t p) : p_(p) {
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    r_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t residue() const noexcept { return r_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return r_ == 0; }
  bool is_one() const noexcept { return r_ == 1; }

  PrimeFieldElement inverse() const;

  PrimeFieldElement operator-() const { return raw(r_ == 0 ? 0 : p_ - r_, p_); }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o) {
    check(o);
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
    return *this;
  }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) {
    check(o);
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    return *this;
  }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) {
    check(o);
    r_ = (r_ * o.r_) % p_;
    return *this;
  }
  PrimeFieldElement& operator/=(const PrimeFieldElement& o) { return *this *= o.inverse(); }
  friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
  friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
  friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
  friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { return a /= b; }
  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.r_ == b.r_ && a.p_ == b.p_;
  }

  std::string to_string() const { return std::to_string(r_); }
  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) {
    return os << a.r_ << " mod " << a.p_;
  }

 private:
  static PrimeFieldElement raw(std::uint64_t r, std::uint64_t p) {
    PrimeFieldElement e;
    e.r_ = r;
    e.p_ = p;
    return e;
  }
  void check(const PrimeFieldElement& o) const {
    if (p_ != o.p_) throw InputError("prime field modulus mismatch");
  }

  std::uint64_t r_ = 0;
  std::uint64_t p_ = 2;
};

inline PrimeFieldElement PrimeFieldElement::inverse() const {
  if (r_ == 0) throw DivisionByZero();
  std::int64_t a = static_cast<std::int64_t>(r_), m = static_cast<std::int64_t>(p_);
  std::int64_t x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::tie(a, m) = std::pair{m, a - q * m};
    std::tie(x0, x1) = std::pair{x1, x0 - q * x1};
  }
  return PrimeFieldElement(x0, p_);
}

inline PrimeFieldElement fp_inv(const PrimeFieldElement& a) { return a.inverse(); }

/// Image of r in Z/p. Throws BadPrime when p divides the denominator.
inline PrimeFieldElement rat_to_fp(const Rational& r, std::uint64_t p) {
  Integer den = r.denominator();
  if (mpz_divisible_ui_p(den.get_mpz_t(), p)) throw BadPrime(p);
  Integer pm(static_cast<unsigned long>(p));
  Integer n = r.numerator() % pm;
  Integer d = den % pm;
  if (n < 0) n += pm;
  PrimeFieldElement num(static_cast<std::int64_t>(n.get_ui()), p);
  PrimeFieldElement dd(static_cast<std::int64_t>(d.get_ui()), p);
  return num / dd;
}

/// Largest prime below 2^16; the default for modular mode.
inline constexpr std::uint64_t kDefaultPrime = 65521;

/// Coefficient field tag carried by every ring.
struct CoeffField {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::uint64_t prime = 0;

  static CoeffField rational() { return {}; }
  static CoeffField modular(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ULL << 32)) throw InputError("modulus must be a prime below 2^32");
    return {Kind::Prime, p};
  }
  bool is_rational() const { return kind == Kind::Rational; }
  std::string to_string() const {
    return is_rational() ? std::string("rational") : "prime " + std::to_string(prime);
  }
  friend bool operator==(const CoeffField&, const CoeffField&) = default;
};

/// Glue between the generic polynomial code and a concrete coefficient type.
template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
  static Rational from_rational(const Rational& r, const CoeffField&) { return r; }
  static Rational zero(const CoeffField&) { return Rational(); }
  static Rational one(const CoeffField&) { return Rational(1); }
  static bool is_negative(const Rational& a) { return a.is_negative(); }
  static bool matches(const CoeffField& f) { return f.is_rational(); }
};

template <>
struct field_traits<PrimeFieldElement> {
  static PrimeFieldElement from_rational(const Rational& r, const CoeffField& f) {
    return rat_to_fp(r, f.prime);
  }
  static PrimeFieldElement zero(const CoeffField& f) { return {0, f.prime}; }
  static PrimeFieldElement one(const CoeffField& f) { return {1, f.prime}; }
  static bool is_negative(const PrimeFieldElement&) { return false; }
  static bool matches(const CoeffField& f) { return !f.is_rational(); }
};

template <class K>
concept Field = requires(K a, K b, CoeffField f, Rational r) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inverse() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { field_traits<K>::from_rational(r, f) } -> std::convertible_to<K>;
};

}  // namespace hadamard

#endif  // HADAMARD_ARITH_HPP
