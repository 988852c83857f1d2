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

#ifndef HADAMARD_IDEAL_HPP
#define HADAMARD_IDEAL_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/groebner.hpp"
#include "hadamard/polynomial.hpp"

namespace hadamard {

/// Generators in a ring plus a lazily filled cache of reduced Groebner bases,
/// one per monomial order. Copies share the cache.
template <Field K>
class Ideal {
 public:
  using Poly = Polynomial<K>;

  Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    if (gens_.empty()) throw InputError("an ideal needs at least one generator");
    for (auto& g : gens_) {
      if (!g.ring().compatible(*ring_)) throw InputError("generator from a different ring");
      g = g.rebased(ring_);
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(ring, {Poly(ring)}); }
  static Ideal unit(RingPtr ring) { return Ideal(ring, {Poly::one(ring)}); }

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }

  /// Reduced Groebner basis for `order`; elements live in ring().with_order(order).
  const std::vector<Poly>& groebner_basis(const MonomialOrder& order,
                                          const GroebnerOptions& opts = {}) const {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, basis] : cache_->entries)
      if (o == order) return basis;
    RingPtr r = order == ring_->order() ? ring_ : ring_->with_order(order);
    cache_->entries.emplace_back(order, buchberger<K>(gens_, r, opts));
    return cache_->entries.back().second;
  }
  const std::vector<Poly>& groebner_basis(const GroebnerOptions& opts = {}) const {
    return groebner_basis(ring_->order(), opts);
  }

  /// Records a basis already known to be the reduced Groebner basis for
  /// `order` (e.g. the drop-free part of an elimination basis).
  void seed_basis(const MonomialOrder& order, std::vector<Poly> basis) const {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, b] : cache_->entries)
      if (o == order) return;
    cache_->entries.emplace_back(order, std::move(basis));
  }

  bool is_unit(const GroebnerOptions& opts = {}) const {
    const auto& g = groebner_basis(opts);
    return g.size() == 1 && g.front().is_constant() && !g.front().is_zero();
  }
  bool is_zero_ideal(const GroebnerOptions& opts = {}) const { return groebner_basis(opts).empty(); }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_homogeneous(); });
  }

  Ideal operator+(const Ideal& o) const {
    if (!ring_->compatible(*o.ring_)) throw InputError("ring mismatch");
    std::vector<Poly> g = gens_;
    for (const auto& p : o.gens_) g.push_back(p.rebased(ring_));
    return Ideal(ring_, std::move(g));
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::vector<Poly>>> entries;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

namespace detail {

inline std::string fresh_name(const Ring& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 1; ring.index_of(name); ++k) name = stem + "_" + std::to_string(k);
  return name;
}

}  // namespace detail

template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  const auto& g = ideal.groebner_basis(opts);
  return normal_form<K>(f.rebased(ideal.ring_ptr()), std::span<const Polynomial<K>>(g), opts);
}

template <Field K>
bool ideal_member(const Polynomial<K>& f, const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  if (!f.ring().compatible(ideal.ring())) throw InputError("ring mismatch in ideal_member");
  return normal_form(f, ideal, opts).is_zero();
}

/// I ∩ K[remaining variables], in a ring of the remaining variables (same
/// relative order, degrevlex). Computed from one block-elimination basis.
template <Field K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::size_t>& drop,
                   const GroebnerOptions& opts = {}) {
  const Ring& ring = ideal.ring();
  std::set<std::size_t> dropset(drop.begin(), drop.end());
  for (std::size_t i : dropset)
    if (i >= ring.size()) throw InputError("elimination variable out of range");
  if (dropset.empty()) {
    Ideal<K> out(ideal.ring_ptr(), ideal.groebner_basis(opts));
    out.seed_basis(ideal.ring().order(), ideal.groebner_basis(opts));
    return out;
  }
  std::vector<std::string> names;
  std::vector<std::string> kept_names;
  std::vector<std::size_t> to_elim(ring.size());
  for (std::size_t i : dropset) {
    to_elim[i] = names.size();
    names.push_back(ring.name(i));
  }
  std::vector<std::size_t> kept_index;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!dropset.count(i)) {
      to_elim[i] = names.size();
      names.push_back(ring.name(i));
      kept_names.push_back(ring.name(i));
      kept_index.push_back(i);
    }
  RingPtr elim_ring = Ring::make(names, ring.field(), MonomialOrder::block({dropset.size()}));
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.mapped(elim_ring, to_elim));
  std::vector<Polynomial<K>> basis = buchberger<K>(gens, elim_ring, opts);

  if (kept_names.empty()) {
    // Everything eliminated: the result is the zero or unit ideal of a ring
    // without variables, which we do not model.
    throw InputError("cannot eliminate every variable");
  }
  RingPtr kept_ring = Ring::make(kept_names, ring.field(), MonomialOrder::degrevlex());
  std::vector<std::size_t> back(names.size(), 0);
  for (std::size_t k = 0; k < kept_names.size(); ++k) back[dropset.size() + k] = k;
  std::vector<Polynomial<K>> kept;
  for (const auto& g : basis) {
    bool free = true;
    for (std::size_t v = 0; v < dropset.size() && free; ++v) free = !g.contains_variable(v);
    if (free) kept.push_back(g.mapped(kept_ring, back));
  }
  if (kept.empty()) return Ideal<K>::zero(kept_ring);
  std::sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
    return kept_ring->order().compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  Ideal<K> out(kept_ring, kept);
  out.seed_basis(kept_ring->order(), kept);
  return out;
}

/// Elimination by variable names.
template <Field K>
Ideal<K> eliminate(const Ideal<K>& ideal, const std::vector<std::string>& drop,
                   const GroebnerOptions& opts = {}) {
  std::vector<std::size_t> idx;
  for (const auto& n : drop) {
    auto i = ideal.ring().index_of(n);
    if (!i) throw InputError("unknown variable '" + n + "'");
    idx.push_back(*i);
  }
  return eliminate(ideal, idx, opts);
}

namespace detail {

// Ring with one extra variable t in front; returns the ring and the
// embedding map of the old variables.
template <Field K>
std::pair<RingPtr, std::vector<std::size_t>> with_leading_variable(const Ring& ring) {
  std::vector<std::string> names{fresh_name(ring, "t")};
  for (const auto& n : ring.names()) names.push_back(n);
  std::vector<std::size_t> map(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) map[i] = i + 1;
  return {Ring::make(names, ring.field(), MonomialOrder::block({1})), map};
}

// Put an ideal computed in a degrevlex copy back into `target`'s ring.
template <Field K>
Ideal<K> into_ring(const Ideal<K>& in, const RingPtr& target) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : in.groebner_basis()) gens.push_back(g.rebased(target));
  Ideal<K> out(target, gens);
  if (target->order() == in.ring().order()) out.seed_basis(target->order(), in.groebner_basis());
  return out;
}

}  // namespace detail

/// (I : f^∞), by eliminating t from I + (1 - t f).
template <Field K>
Ideal<K> colon_saturate(const Ideal<K>& ideal, const Polynomial<K>& f, const GroebnerOptions& opts = {}) {
  if (f.is_zero()) throw InputError("saturation by the zero polynomial");
  if (!f.ring().compatible(ideal.ring())) throw InputError("ring mismatch in colon_saturate");
  auto [ext, map] = detail::with_leading_variable<K>(ideal.ring());
  std::vector<Polynomial<K>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.mapped(ext, map));
  Polynomial<K> t = Polynomial<K>::variable(ext, 0);
  gens.push_back(Polynomial<K>::one(ext) - t * f.mapped(ext, map));
  Ideal<K> elim = eliminate(Ideal<K>(ext, gens), std::vector<std::size_t>{0}, opts);
  return detail::into_ring(elim, ideal.ring_ptr());
}

/// I ∩ J, by eliminating t from t·I + (1 - t)·J.
template <Field K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b, const GroebnerOptions& opts = {}) {
  if (!a.ring().compatible(b.ring())) throw InputError("ring mismatch in intersect");
  auto [ext, map] = detail::with_leading_variable<K>(a.ring());
  Polynomial<K> t = Polynomial<K>::variable(ext, 0);
  Polynomial<K> u = Polynomial<K>::one(ext) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.mapped(ext, map));
  for (const auto& g : b.generators()) gens.push_back(u * g.mapped(ext, map));
  Ideal<K> elim = eliminate(Ideal<K>(ext, gens), std::vector<std::size_t>{0}, opts);
  return detail::into_ring(elim, a.ring_ptr());
}

/// ∩_i (I : x_i^∞) over all ring variables.
template <Field K>
Ideal<K> saturate_irrelevant(const Ideal<K>& ideal, const GroebnerOptions& opts = {}) {
  std::optional<Ideal<K>> acc;
  for (std::size_t i = 0; i < ideal.ring().size(); ++i) {
    Ideal<K> c = colon_saturate(ideal, Polynomial<K>::variable(ideal.ring_ptr(), i), opts);
    if (!acc) acc = c;
    else if (acc->is_unit(opts)) acc = c;
    else if (!c.is_unit(opts)) acc = intersect(*acc, c, opts);
  }
  return *acc;
}

/// Equality of ideals via their reduced degrevlex bases.
template <Field K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b, const GroebnerOptions& opts = {}) {
  if (!a.ring().compatible(b.ring())) throw InputError("ring mismatch in ideal_equal");
  MonomialOrder o = MonomialOrder::degrevlex();
  const auto& ga = a.groebner_basis(o, opts);
  const auto& gb = b.groebner_basis(o, opts);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

}  // namespace hadamard

#endif  // HADAMARD_IDEAL_HPP
