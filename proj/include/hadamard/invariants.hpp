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

#ifndef HADAMARD_INVARIANTS_HPP
#define HADAMARD_INVARIANTS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hadamard/arith.hpp"
#include "hadamard/ideal.hpp"
#include "hadamard/monomial.hpp"

namespace hadamard {

/// Dense univariate polynomial with integer coefficients; index = power of t.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
  static UniPoly constant(long v) { return UniPoly({Integer(v)}); }
  /// 1 - t^d
  static UniPoly one_minus_power(unsigned d) {
    std::vector<Integer> c(d + 1, 0);
    c[0] += 1;
    c[d] -= 1;
    return UniPoly(std::move(c));
  }

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  Integer at_one() const {
    Integer s = 0;
    for (const auto& v : c_) s += v;
    return s;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  /// t^k * this
  UniPoly shifted(unsigned k) const {
    if (is_zero()) return {};
    std::vector<Integer> c(k, 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return UniPoly(std::move(c));
  }
  /// Exact quotient by (1 - t); requires at_one() == 0.
  UniPoly divided_by_one_minus_t() const {
    // (1 - t) q = p  =>  q_i = p_0 + ... + p_i
    if (c_.empty()) return {};
    std::vector<Integer> q(c_.size() - 1, 0);
    Integer run = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      run += c_[i];
      q[i] = run;
    }
    return UniPoly(std::move(q));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// "1 + 2*t - t^3"
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Integer mag = abs(c_[i]);
      bool neg = c_[i] < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      if (i == 0 || mag != 1) os << mag.get_str() << (i ? "*" : "");
      if (i >= 1) os << "t";
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Integer> c_;
};

namespace detail {

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

inline UniPoly hilbert_numerator_rec(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return UniPoly::constant(1);
  std::size_t n = gens.front().size();
  // Pairwise coprime generators: the quotient is a tensor product of
  // principal quotients.
  std::vector<unsigned> count(n, 0);
  for (const auto& m : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i]) ++count[i];
  std::size_t pivot = n;
  for (std::size_t i = 0; i < n; ++i)
    if (count[i] >= 2 && (pivot == n || count[i] > count[pivot])) pivot = i;
  if (pivot == n) {
    UniPoly r = UniPoly::constant(1);
    for (const auto& m : gens) r = r * UniPoly::one_minus_power(m.degree());
    return r;
  }
  // HN(M) = HN(M + (x)) + t * HN(M : x) for the pivot variable x.
  Monomial x = Monomial::variable(n, pivot);
  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& m : gens) {
    Monomial q = m;
    if (q[pivot]) q.set(pivot, q[pivot] - 1);
    colon.push_back(q);
  }
  return hilbert_numerator_rec(std::move(plus)) + hilbert_numerator_rec(std::move(colon)).shifted(1);
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of the quotient by
/// the monomial ideal generated by `gens` (pivot-splitting recursion).
inline UniPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& m : gens)
    if (m.size() != nvars) throw InputError("monomial size does not match variable count");
  if (nvars == 0) return UniPoly::constant(gens.empty() ? 1 : 0);
  return detail::hilbert_numerator_rec(gens);
}

/// Projective invariants of the scheme cut out by a homogeneous ideal.
struct InvariantReport {
  int ambient = 0;                 // n, for P^n
  int dimension = -1;              // -1 for the empty scheme
  std::optional<Integer> degree;   // absent when empty
  std::vector<Integer> hilbert_function;  // HF(0..T)
  UniPoly numerator;               // over (1 - t)^(n+1)
  UniPoly reduced_numerator;       // after removing all (1 - t) factors

  bool empty() const { return dimension < 0; }
};

/// Dimension, degree and Hilbert function from a Hilbert series numerator of
/// a quotient of a polynomial ring in `nvars` variables.
inline InvariantReport invariants_from_numerator(const UniPoly& numerator, std::size_t nvars,
                                                 unsigned truncation) {
  InvariantReport rep;
  rep.ambient = static_cast<int>(nvars) - 1;
  rep.numerator = numerator;
  UniPoly red = numerator;
  std::size_t k = 0;
  if (!red.is_zero()) {
    while (k < nvars && red.at_one() == 0) {
      red = red.divided_by_one_minus_t();
      ++k;
    }
  }
  rep.reduced_numerator = red;
  std::size_t m = nvars - k;  // Krull dimension of the quotient
  if (red.is_zero() || m == 0) {
    // Either the unit ideal, or a quotient of finite length (irrelevant
    // component only): both define the empty projective scheme.
    rep.dimension = -1;
  } else {
    rep.dimension = static_cast<int>(m) - 1;
    rep.degree = red.at_one();
  }
  for (unsigned s = 0; s <= truncation; ++s) {
    Integer hf = 0;
    if (m == 0) {
      hf = red.coeff(s);
    } else {
      for (std::size_t j = 0; j < red.coeffs().size() && j <= s; ++j)
        hf += red.coeffs()[j] * detail::binomial(static_cast<long>(s - j + m - 1), static_cast<long>(m - 1));
    }
    rep.hilbert_function.push_back(hf);
  }
  return rep;
}

template <Field K>
std::vector<Monomial> leading_monomials(const std::vector<Polynomial<K>>& basis) {
  std::vector<Monomial> lm;
  for (const auto& g : basis)
    if (!g.is_zero()) lm.push_back(g.leading_monomial());
  return lm;
}

/// Invariants of V(I) ⊂ P^n, read from the leading-term ideal for `order`
/// (degrevlex by default).
template <Field K>
InvariantReport variety_invariants(const Ideal<K>& ideal, unsigned truncation = 5,
                                   const MonomialOrder& order = MonomialOrder::degrevlex(),
                                   const GroebnerOptions& opts = {}) {
  if (!ideal.is_homogeneous()) throw InputError("variety_invariants needs a homogeneous ideal");
  const auto& g = ideal.groebner_basis(order, opts);
  std::size_t nv = ideal.ring().size();
  return invariants_from_numerator(hilbert_numerator(leading_monomials(g), nv), nv, truncation);
}

/// For each t ≤ T: HF_product(t) == Π HF_factor(t).
inline std::vector<bool> hf_product_check(const std::vector<InvariantReport>& factors,
                                          const InvariantReport& product, unsigned truncation) {
  std::vector<bool> out;
  for (unsigned t = 0; t <= truncation; ++t) {
    if (t >= product.hilbert_function.size()) throw InputError("product report truncated below T");
    Integer prod = 1;
    for (const auto& f : factors) {
      if (t >= f.hilbert_function.size()) throw InputError("factor report truncated below T");
      prod *= f.hilbert_function[t];
    }
    out.push_back(prod == product.hilbert_function[t]);
  }
  return out;
}

}  // namespace hadamard

#endif  // HADAMARD_INVARIANTS_HPP
