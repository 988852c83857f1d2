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

#ifndef HADAMARD_MONOMIAL_HPP
#define HADAMARD_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <vector>

#include "hadamard/errors.hpp"

namespace hadamard {

/// Dense exponent vector. Rings here have at most a few dozen variables, so
/// the exponents live inline together with the total degree and a support
/// bitmask used as a fast divisibility filter.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 64;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(check_size(nvars)) {}
  Monomial(std::initializer_list<unsigned> exps) : Monomial(std::vector<unsigned>(exps)) {}
  explicit Monomial(std::span<const unsigned> exps) : n_(check_size(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }
  explicit Monomial(const std::vector<unsigned>& exps)
      : Monomial(std::span<const unsigned>(exps.data(), exps.size())) {}

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  unsigned degree() const noexcept { return deg_; }
  std::uint64_t support() const noexcept { return mask_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (e > kMaxExponent) throw InputError("exponent exceeds 255");
    deg_ = deg_ - e_[i] + e;
    e_[i] = static_cast<std::uint8_t>(e);
    if (e) mask_ |= (std::uint64_t{1} << i);
    else mask_ &= ~(std::uint64_t{1} << i);
  }

  std::vector<unsigned> exponents() const { return {e_.begin(), e_.begin() + n_}; }

  /// Sum of exponents over variables [begin, end).
  unsigned block_degree(std::size_t begin, std::size_t end) const {
    unsigned d = 0;
    for (std::size_t i = begin; i < end; ++i) d += e_[i];
    return d;
  }

  bool divides(const Monomial& o) const noexcept {
    if (mask_ & ~o.mask_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const noexcept { return (mask_ & o.mask_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      unsigned e = unsigned(a.e_[i]) + b.e_[i];
      if (e > kMaxExponent) throw InputError("exponent exceeds 255");
      r.e_[i] = static_cast<std::uint8_t>(e);
    }
    r.deg_ = a.deg_ + b.deg_;
    r.mask_ = a.mask_ | b.mask_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, unsigned(a.e_[i]) - b.e_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::max(a.e_[i], b.e_[i]));
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, std::min(a.e_[i], b.e_[i]));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.mask_ == b.mask_ && a.e_ == b.e_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

 private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > kMaxVars) throw InputError("too many variables (max 64)");
    return static_cast<std::uint8_t>(n);
  }

  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint64_t mask_ = 0;
  std::uint16_t deg_ = 0;
  std::uint8_t n_ = 0;
};

/// lex, degrevlex, or block-elimination (degrevlex inside consecutive blocks,
/// blocks compared left to right).
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}); }
  /// Blocks of the given sizes, consecutive from variable 0. Eliminates the
  /// first block.
  static MonomialOrder block(std::vector<std::size_t> sizes) {
    return MonomialOrder(Kind::Block, std::move(sizes));
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& block_sizes() const noexcept { return sizes_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::DegRevLex:
        return grevlex(a, b, 0, a.size());
      case Kind::Block: {
        std::size_t begin = 0;
        for (std::size_t s : sizes_) {
          auto c = grevlex(a, b, begin, begin + s);
          if (c != 0) return c;
          begin += s;
        }
        return grevlex(a, b, begin, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::vector<std::size_t> s) : kind_(k), sizes_(std::move(s)) {}

  static std::strong_ordering grevlex(const Monomial& a, const Monomial& b, std::size_t begin,
                                      std::size_t end) noexcept {
    unsigned da, db;
    if (begin == 0 && end == a.size()) {
      da = a.degree();
      db = b.degree();
    } else {
      da = a.block_degree(begin, end);
      db = b.block_degree(begin, end);
    }
    if (da != db) return da <=> db;
    for (std::size_t i = end; i-- > begin;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::vector<std::size_t> sizes_;
};

inline std::strong_ordering compare_monomials(const MonomialOrder& order, const Monomial& a,
                                              const Monomial& b) {
  if (a.size() != b.size()) throw InputError("monomials from different rings");
  return order.compare(a, b);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace hadamard

#endif  // HADAMARD_MONOMIAL_HPP
