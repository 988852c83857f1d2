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

#ifndef HADAMARD_POLYNOMIAL_HPP
#define HADAMARD_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hadamard/arith.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/monomial.hpp"
#include "hadamard/ring.hpp"

namespace hadamard {

template <Field K>
struct Term {
  K coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients, no repeated monomials.
template <Field K>
class Polynomial {
 public:
  using Coeff = K;
  using TermType = Term<K>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!field_traits<K>::matches(ring_->field()))
      throw InputError("coefficient type does not match ring field");
  }
  Polynomial(RingPtr ring, std::vector<TermType> terms) : Polynomial(std::move(ring)) {
    terms_ = std::move(terms);
    canonicalize();
  }

  static Polynomial constant(RingPtr ring, const K& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({c, Monomial(ring->size())});
    return p;
  }
  static Polynomial from_int(RingPtr ring, long v) {
    return constant(ring, field_traits<K>::from_rational(Rational(v), ring->field()));
  }
  static Polynomial one(RingPtr ring) { return from_int(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    Polynomial p(ring);
    if (i >= ring->size()) throw InputError("variable index out of range");
    p.terms_.push_back({field_traits<K>::one(ring->field()), Monomial::variable(ring->size(), i)});
    return p;
  }
  static Polynomial term(RingPtr ring, const K& c, const Monomial& m) {
    Polynomial p(ring);
    if (m.size() != ring->size()) throw InputError("monomial size does not match ring");
    if (!c.is_zero()) p.terms_.push_back({c, m});
    return p;
  }

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<TermType>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Monomial& leading_monomial() const { return nonzero().terms_.front().mono; }
  const K& leading_coeff() const { return nonzero().terms_.front().coeff; }

  K zero_coeff() const { return field_traits<K>::zero(ring_->field()); }
  K coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return zero_coeff();
  }

  /// Maximum total degree over terms; -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  /// Per-block degrees when every term agrees on them; nullopt otherwise.
  /// The zero polynomial has no multidegree.
  std::optional<std::vector<unsigned>> multidegree(const std::vector<VariableBlock>& blocks) const {
    if (terms_.empty()) return std::nullopt;
    auto degs = [&](const Monomial& m) {
      std::vector<unsigned> d;
      for (const auto& b : blocks) d.push_back(m.block_degree(b.begin, b.end));
      return d;
    };
    auto first = degs(terms_.front().mono);
    for (const auto& t : terms_)
      if (degs(t.mono) != first) return std::nullopt;
    return first;
  }

  bool contains_variable(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.mono[i]) return true;
    return false;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::optional<Polynomial> slot;
    return merge(a, a.aligned(b, slot), false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::optional<Polynomial> slot;
    return merge(a, a.aligned(b, slot), true);
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::optional<Polynomial> slot;
    const Polynomial& bb = a.aligned(b, slot);
    if (a.is_zero() || bb.is_zero()) return Polynomial(a.ring_);
    if (bb.size() == 1) return a.mul_term(bb.terms_[0].coeff, bb.terms_[0].mono);
    if (a.size() == 1) return bb.mul_term(a.terms_[0].coeff, a.terms_[0].mono).rebased(a.ring_);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.size() * bb.size());
    for (const auto& s : a.terms_)
      for (const auto& t : bb.terms_) {
        Monomial m = s.mono * t.mono;
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(std::move(m), s.coeff * t.coeff);
        else it->second += s.coeff * t.coeff;
      }
    std::vector<TermType> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.push_back({c, m});
    Polynomial r(a.ring_);
    r.terms_ = std::move(out);
    r.sort_terms();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  /// c * m * this. Multiplication by a monomial preserves term order.
  Polynomial mul_term(const K& c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
    return r;
  }

  /// this -= c * m * g, in one merge pass.
  void sub_mul_term(const K& c, const Monomial& m, const Polynomial& g) {
    const MonomialOrder& ord = ring_->order();
    std::vector<TermType> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto it = terms_.begin();
    auto end = terms_.end();
    for (const auto& t : g.terms_) {
      Monomial gm = t.mono * m;
      while (it != end && ord.greater(it->mono, gm)) out.push_back(std::move(*it++));
      if (it != end && it->mono == gm) {
        K v = it->coeff - c * t.coeff;
        if (!v.is_zero()) out.push_back({std::move(v), std::move(gm)});
        ++it;
      } else {
        out.push_back({-(c * t.coeff), std::move(gm)});
      }
    }
    while (it != end) out.push_back(std::move(*it++));
    terms_ = std::move(out);
  }

  void drop_leading() { terms_.erase(terms_.begin()); }

  Polynomial monic() const {
    if (is_zero() || leading_coeff().is_one()) return *this;
    return scaled(leading_coeff().inverse());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_->compatible(*b.ring_)) return false;
    std::optional<Polynomial> slot;
    return a.terms_ == a.aligned(b, slot).terms_;
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() != ring_->size()) throw InputError("evaluation point has wrong length");
    K sum = zero_coeff();
    for (const auto& t : terms_) {
      K v = t.coeff;
      for (std::size_t i = 0; i < ring_->size(); ++i)
        for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
      sum += v;
    }
    return sum;
  }

  /// Replace variable i by images[i]; the result lives in the images' ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->size()) throw InputError("substitution needs one image per variable");
    if (images.empty()) throw InputError("substitution into a ring without variables");
    RingPtr target = images.front().ring_;
    // powers[i][e] = images[i]^e, built on demand
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::one(target));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      return pw[e];
    };
    Polynomial result(target);
    for (const auto& t : terms_) {
      Polynomial v = Polynomial::constant(target, t.coeff);
      for (std::size_t i = 0; i < ring_->size(); ++i)
        if (t.mono[i]) v = v * power(i, t.mono[i]);
      result += v;
    }
    return result;
  }

  Polynomial derivative(std::size_t i) const {
    std::vector<TermType> out;
    for (const auto& t : terms_) {
      if (!t.mono[i]) continue;
      Monomial m = t.mono;
      unsigned e = m[i];
      m.set(i, e - 1);
      K c = t.coeff * field_traits<K>::from_rational(Rational(static_cast<long>(e)), ring_->field());
      if (!c.is_zero()) out.push_back({c, m});
    }
    Polynomial r(ring_);
    r.terms_ = std::move(out);
    r.sort_terms();
    return r;
  }

  /// Same polynomial viewed in a compatible ring (typically another order).
  Polynomial rebased(RingPtr target) const {
    if (target == ring_) return *this;
    if (!ring_->compatible(*target)) throw InputError("ring mismatch");
    Polynomial r(std::move(target));
    r.terms_ = terms_;
    r.sort_terms();
    return r;
  }

  /// Move into another ring, sending variable i to target variable map[i].
  Polynomial mapped(RingPtr target, const std::vector<std::size_t>& map) const {
    if (map.size() != ring_->size()) throw InputError("variable map has wrong length");
    if (target->field() != ring_->field()) throw InputError("field mismatch");
    Polynomial r(target);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->size());
      for (std::size_t i = 0; i < ring_->size(); ++i)
        if (t.mono[i]) {
          if (map[i] >= target->size()) throw InputError("variable map out of range");
          m.set(map[i], m[map[i]] + t.mono[i]);
        }
      r.terms_.push_back({t.coeff, m});
    }
    r.canonicalize();
    return r;
  }

 private:
  const Polynomial& nonzero() const {
    if (terms_.empty()) throw InputError("leading term of the zero polynomial");
    return *this;
  }

  // o itself when it is already sorted by this ring's order, otherwise a
  // reordered copy stored in `slot`.
  const Polynomial& aligned(const Polynomial& o, std::optional<Polynomial>& slot) const {
    if (o.ring_ == ring_) return o;
    if (!ring_->compatible(*o.ring_)) throw InputError("ring mismatch");
    if (ring_->order() == o.ring_->order()) return o;
    slot = o.rebased(ring_);
    return *slot;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    const MonomialOrder& ord = a.ring_->order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && ord.greater(i->mono, j->mono))) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || ord.greater(j->mono, i->mono)) {
        r.terms_.push_back({subtract ? -j->coeff : j->coeff, j->mono});
        ++j;
      } else {
        K c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
        if (!c.is_zero()) r.terms_.push_back({c, i->mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    const MonomialOrder& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const TermType& x, const TermType& y) { return ord.greater(x.mono, y.mono); });
  }

  void canonicalize() {
    for (const auto& t : terms_)
      if (t.mono.size() != ring_->size()) throw InputError("monomial size does not match ring");
    sort_terms();
    std::vector<TermType> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) out.back().coeff += t.coeff;
      else out.push_back(std::move(t));
    }
    std::erase_if(out, [](const TermType& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<TermType> terms_;
};

template <Field K>
Polynomial<K> poly_mul(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (!f.ring().compatible(g.ring())) throw InputError("ring mismatch");
  return f * g;
}

/// Multidegree with respect to `blocks`, or nullopt when f is not
/// multihomogeneous. A single block spanning the ring is the usual
/// homogeneity test.
template <Field K>
std::optional<std::vector<unsigned>> multidegree(const Polynomial<K>& f,
                                                 const std::vector<VariableBlock>& blocks) {
  std::size_t covered = 0;
  for (const auto& b : blocks) {
    if (b.begin != covered) throw InputError("blocks must partition the variables");
    covered = b.end;
  }
  if (covered != f.ring().size()) throw InputError("blocks must partition the variables");
  return f.multidegree(blocks);
}

}  // namespace hadamard

#endif  // HADAMARD_POLYNOMIAL_HPP
