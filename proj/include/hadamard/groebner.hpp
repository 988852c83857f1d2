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

// Buchberger's algorithm with the Gebauer-Moeller pair update (product and
// chain criteria), normal selection with sugar tie-break, and final
// interreduction to the reduced basis.

#ifndef HADAMARD_GROEBNER_HPP
#define HADAMARD_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/polynomial.hpp"

namespace hadamard {

/// Resource caps for a single Groebner computation. Hitting either one raises
/// BudgetExceeded.
struct GroebnerOptions {
  std::size_t max_pair_reductions = 1'000'000;
  std::size_t max_terms = 2'000'000;
};

namespace detail {

template <Field K>
const Polynomial<K>* find_reducer(const Monomial& m, std::span<const Polynomial<K>* const> basis) {
  for (const Polynomial<K>* g : basis)
    if (g->leading_monomial().divides(m)) return g;
  return nullptr;
}

// Full reduction of f by the (nonzero) basis polynomials, which must share
// f's ring and order.
template <Field K>
Polynomial<K> reduce_full(Polynomial<K> p, std::span<const Polynomial<K>* const> basis,
                          const GroebnerOptions& opts) {
  std::vector<Term<K>> rest;
  while (!p.is_zero()) {
    const auto& lt = p.terms().front();
    if (const Polynomial<K>* g = find_reducer<K>(lt.mono, basis)) {
      K c = lt.coeff / g->leading_coeff();
      Monomial m = lt.mono / g->leading_monomial();
      p.sub_mul_term(c, m, *g);
      if (p.size() > opts.max_terms) throw BudgetExceeded("term budget exceeded during reduction");
    } else {
      rest.push_back(lt);
      p.drop_leading();
    }
  }
  return Polynomial<K>(p.ring_ptr(), std::move(rest));
}

}  // namespace detail

/// Remainder of f under multivariate division by `basis` in the order of f's
/// ring. The result has no term divisible by a leading term of the basis.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis,
                          const GroebnerOptions& opts = {}) {
  std::vector<Polynomial<K>> aligned;
  aligned.reserve(basis.size());
  std::vector<const Polynomial<K>*> ptrs;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.ring_ptr() == f.ring_ptr()) {
      ptrs.push_back(&g);
      continue;
    }
    if (!g.ring().compatible(f.ring())) throw InputError("ring mismatch in normal_form");
    aligned.push_back(g.rebased(f.ring_ptr()));
  }
  for (const auto& g : aligned) ptrs.push_back(&g);
  return detail::reduce_full<K>(f, ptrs, opts);
}

/// normal_form with an explicit order; the result is expressed in f's ring
/// re-ordered by `order`.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, std::span<const Polynomial<K>> basis,
                          const MonomialOrder& order, const GroebnerOptions& opts = {}) {
  RingPtr r = f.ring().with_order(order);
  return normal_form<K>(f.rebased(r), basis, opts);
}

template <Field K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<K> a = f.mul_term(g.leading_coeff(), l / f.leading_monomial());
  Polynomial<K> b = g.mul_term(f.leading_coeff(), l / g.leading_monomial());
  return a - b;
}

namespace detail {

template <Field K>
class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& opts) : ring_(std::move(ring)), opts_(opts) {}

  std::vector<Polynomial<K>> run(const std::vector<Polynomial<K>>& input) {
    for (const auto& f : input) {
      if (f.is_zero()) continue;
      Polynomial<K> g = f.rebased(ring_);
      unsigned sugar = static_cast<unsigned>(g.total_degree());
      g = reduce_top(std::move(g), sugar);
      if (g.is_zero()) continue;
      if (g.is_constant()) return {Polynomial<K>::one(ring_)};
      insert(g.monic(), sugar);
    }
    while (!pairs_.empty()) {
      std::size_t k = select();
      Pair pr = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      if (++reductions_ > opts_.max_pair_reductions)
        throw BudgetExceeded("pair-reduction budget of " + std::to_string(opts_.max_pair_reductions) +
                             " exceeded");
      unsigned sugar = pr.sugar;
      Polynomial<K> h = reduce_top(s_polynomial(polys_[pr.i], polys_[pr.j]), sugar);
      if (h.is_zero()) continue;
      if (h.is_constant()) return {Polynomial<K>::one(ring_)};
      insert(h.monic(), sugar);
    }
    return finish();
  }

  std::size_t reductions() const { return reductions_; }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  std::vector<const Polynomial<K>*> active_ptrs() const {
    std::vector<const Polynomial<K>*> v;
    for (std::size_t idx : basis_) v.push_back(&polys_[idx]);
    return v;
  }

  Polynomial<K> reduce_top(Polynomial<K> p, unsigned& sugar) {
    while (!p.is_zero()) {
      const Monomial& lm = p.leading_monomial();
      std::size_t hit = basis_.size();
      for (std::size_t k = 0; k < basis_.size(); ++k)
        if (polys_[basis_[k]].leading_monomial().divides(lm)) {
          hit = k;
          break;
        }
      if (hit == basis_.size()) return p;
      const Polynomial<K>& g = polys_[basis_[hit]];
      Monomial m = lm / g.leading_monomial();
      sugar = std::max(sugar, sugars_[basis_[hit]] + m.degree());
      K c = p.leading_coeff() / g.leading_coeff();
      p.sub_mul_term(c, m, g);
      if (p.size() > opts_.max_terms) throw BudgetExceeded("term budget exceeded during reduction");
    }
    return p;
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    unsigned si = sugars_[i] + l.degree() - polys_[i].leading_monomial().degree();
    unsigned sj = sugars_[j] + l.degree() - polys_[j].leading_monomial().degree();
    return std::max(si, sj);
  }

  std::size_t select() const {
    const MonomialOrder& ord = ring_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      auto c = ord.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
    }
    return best;
  }

  // Gebauer-Moeller update for a new basis element.
  void insert(Polynomial<K> h, unsigned sugar) {
    std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    const Monomial& lh = polys_[hi].leading_monomial();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> c;
    for (std::size_t g : basis_) {
      const Monomial& lg = polys_[g].leading_monomial();
      c.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }
    // Chain criterion among the new pairs: drop (h,g1) if some other (h,g2)
    // has an lcm properly dividing lcm(h,g1); among equal lcms keep one,
    // preferring a coprime pair so the product criterion can discard the
    // whole class.
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c.size() && c[a].keep; ++b) {
        if (a == b || !c[b].keep) continue;
        if (!c[b].lcm.divides(c[a].lcm)) continue;
        if (!(c[b].lcm == c[a].lcm)) {
          c[a].keep = false;
        } else if (c[b].coprime && !c[a].coprime) {
          c[a].keep = false;
        } else if (c[b].coprime == c[a].coprime && b < a) {
          c[a].keep = false;
        }
      }
    }
    // Old pairs (g1,g2) whose lcm is divisible by LM(h) and differs from both
    // new lcms are redundant.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial l1 = lcm(polys_[p.i].leading_monomial(), lh);
        Monomial l2 = lcm(polys_[p.j].leading_monomial(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    // Product criterion.
    for (const Cand& x : c)
      if (x.keep && !x.coprime) pairs_.push_back({x.g, hi, x.lcm, pair_sugar(x.g, hi, x.lcm)});

    std::vector<std::size_t> nb;
    for (std::size_t g : basis_)
      if (!lh.divides(polys_[g].leading_monomial())) nb.push_back(g);
    nb.push_back(hi);
    basis_ = std::move(nb);
  }

  std::vector<Polynomial<K>> finish() {
    const MonomialOrder& ord = ring_->order();
    std::vector<Polynomial<K>> g;
    for (std::size_t idx : basis_) g.push_back(polys_[idx]);
    std::sort(g.begin(), g.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
      return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    // Tail reduction against the other elements; leading terms are fixed, so
    // one sequential pass yields the reduced basis.
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<const Polynomial<K>*> others;
      for (std::size_t m = 0; m < g.size(); ++m)
        if (m != k) others.push_back(&g[m]);
      Polynomial<K> lead = Polynomial<K>::term(ring_, g[k].leading_coeff(), g[k].leading_monomial());
      Polynomial<K> tail = g[k] - lead;
      g[k] = (lead + detail::reduce_full<K>(std::move(tail), others, opts_)).monic();
    }
    return g;
  }

  RingPtr ring_;
  GroebnerOptions opts_;
  std::vector<Polynomial<K>> polys_;
  std::vector<unsigned> sugars_;
  std::vector<std::size_t> basis_;
  std::vector<Pair> pairs_;
  std::size_t reductions_ = 0;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` in the order of
/// `ring` (generators are re-sorted into it). Elements are monic and sorted by
/// increasing leading monomial. The zero ideal yields an empty basis.
template <Field K>
std::vector<Polynomial<K>> buchberger(const std::vector<Polynomial<K>>& gens, const RingPtr& ring,
                                      const GroebnerOptions& opts = {}) {
  for (const auto& f : gens)
    if (!f.ring().compatible(*ring)) throw InputError("ring mismatch in buchberger");
  return detail::Buchberger<K>(ring, opts).run(gens);
}

/// True when every S-polynomial of `basis` reduces to zero.
template <Field K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& basis) {
  std::vector<const Polynomial<K>*> ptrs;
  for (const auto& g : basis)
    if (!g.is_zero()) ptrs.push_back(&g);
  for (std::size_t i = 0; i < ptrs.size(); ++i)
    for (std::size_t j = i + 1; j < ptrs.size(); ++j)
      if (!detail::reduce_full<K>(s_polynomial(*ptrs[i], *ptrs[j]), ptrs, {}).is_zero()) return false;
  return true;
}

/// No leading monomial divides another and no tail term is divisible by any
/// leading monomial; all elements monic.
template <Field K>
bool is_reduced_basis(const std::vector<Polynomial<K>>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !basis[i].leading_coeff().is_one()) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lj = basis[j].leading_monomial();
      for (const auto& t : basis[i].terms())
        if (lj.divides(t.mono)) return false;
    }
  }
  return true;
}

}  // namespace hadamard

#endif  // HADAMARD_GROEBNER_HPP
