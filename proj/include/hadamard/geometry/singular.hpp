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

#ifndef HADAMARD_GEOMETRY_SINGULAR_HPP
#define HADAMARD_GEOMETRY_SINGULAR_HPP

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hadamard/geometry/sampling.hpp"
#include "hadamard/ideal.hpp"
#include "hadamard/invariants.hpp"
#include "hadamard/linalg.hpp"

namespace hadamard {

template <Field K>
struct SingularReport {
  Ideal<K> ideal;              // saturated Jacobian ideal
  InvariantReport invariants;  // of the singular subscheme
  bool smooth = false;
  std::size_t codimension = 0;
  std::size_t minor_count = 0;  // dimension of the span of the minors modulo I
  // "all_minors", or "row_compressed" when minors of A*J for random A were
  // used; either with "_mod_p" for a modular smoothness proof (see
  // singular_locus).
  std::string method = "all_minors";
  std::size_t rounds = 0;
  // Prime of a modular smoothness proof (see singular_locus), 0 if none.
  std::uint64_t certificate_prime = 0;
};

struct SingularOptions {
  // Above this many c x c minors the row-compressed method is used.
  std::size_t max_minors = 4000;
  std::uint64_t seed = 0;
};

/// Jacobian matrix of `gens` (rows) with respect to every ring variable.
template <Field K>
Matrix<Polynomial<K>> jacobian(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) throw InputError("jacobian of an empty generator list");
  const RingPtr& ring = gens.front().ring_ptr();
  std::vector<Polynomial<K>> data;
  for (const auto& g : gens)
    for (std::size_t j = 0; j < ring->size(); ++j) data.push_back(g.derivative(j));
  return Matrix<Polynomial<K>>(gens.size(), ring->size(), std::move(data));
}

namespace detail {

inline Integer count_subsets(std::size_t n, std::size_t k) { return binomial(static_cast<long>(n), static_cast<long>(k)); }

// Reduced echelon basis of the K-span of `polys` (over their monomials).
template <Field K>
std::vector<Polynomial<K>> span_basis(const std::vector<Polynomial<K>>& polys) {
  std::vector<const Polynomial<K>*> live;
  for (const auto& p : polys)
    if (!p.is_zero()) live.push_back(&p);
  if (live.empty()) return {};
  const RingPtr& ring = live.front()->ring_ptr();
  std::vector<Monomial> monos;
  std::unordered_map<Monomial, std::size_t, MonomialHash> col;
  for (const auto* p : live)
    for (const auto& t : p->terms())
      if (col.emplace(t.mono, 0).second) monos.push_back(t.mono);
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->order().greater(a, b); });
  for (std::size_t j = 0; j < monos.size(); ++j) col[monos[j]] = j;
  const CoeffField& field = ring->field();
  Matrix<K> m(live.size(), monos.size(), field_traits<K>::zero(field));
  for (std::size_t i = 0; i < live.size(); ++i)
    for (const auto& t : live[i]->terms()) m(i, col[t.mono]) = t.coeff;
  auto [r, pivots] = rref(std::move(m));
  std::vector<Polynomial<K>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::vector<Term<K>> terms;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!r(i, j).is_zero()) terms.push_back({r(i, j), monos[j]});
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

// Appends to `all` a basis of span(minors already after `base`, ms).
template <Field K>
void add_minors(std::vector<Polynomial<K>>& all, std::size_t base, const std::vector<Polynomial<K>>& ms) {
  std::vector<Polynomial<K>> pool(all.begin() + static_cast<std::ptrdiff_t>(base), all.end());
  pool.insert(pool.end(), ms.begin(), ms.end());
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(base), all.end());
  for (auto& p : span_basis(pool)) all.push_back(std::move(p));
}

// Images of rational polynomials modulo p; nullopt when p divides a
// denominator.
inline std::optional<std::vector<Polynomial<PrimeFieldElement>>> modular_images(
    const std::vector<Polynomial<Rational>>& polys, std::uint64_t p) {
  if (polys.empty()) return std::vector<Polynomial<PrimeFieldElement>>{};
  RingPtr ring = polys.front().ring().with_field(CoeffField::modular(p));
  std::vector<Polynomial<PrimeFieldElement>> out;
  try {
    for (const auto& f : polys) {
      std::vector<Term<PrimeFieldElement>> terms;
      for (const auto& t : f.terms()) terms.push_back({rat_to_fp(t.coeff, p), t.mono});
      out.emplace_back(ring, std::move(terms));
    }
  } catch (const BadPrime&) {
    return std::nullopt;
  }
  return out;
}

// Cheap screen for an empty projective zero set. Over Q the test runs
// modulo a large prime; a nonempty answer there only skips the exact test.
template <Field K>
bool maybe_empty(const std::vector<Polynomial<K>>& polys, unsigned truncation, const GroebnerOptions& opts) {
  if constexpr (std::is_same_v<K, Rational>) {
    constexpr std::uint64_t kScreenPrime = 2147483647;
    auto images = modular_images(polys, kScreenPrime);
    if (!images) return true;
    RingPtr ring = images->front().ring_ptr();
    return variety_invariants(Ideal<PrimeFieldElement>(ring, *images), truncation, MonomialOrder::degrevlex(), opts)
        .empty();
  } else {
    (void)polys;
    (void)truncation;
    (void)opts;
    return true;
  }
}

struct ModularProof {
  std::uint64_t prime = 0;
  std::string method;
  std::size_t rounds = 0;
  std::size_t minor_count = 0;
};

}  // namespace detail

template <Field K>
SingularReport<K> singular_locus(const Ideal<K>& ideal, int dim, unsigned truncation = 5,
                                 const GroebnerOptions& opts = {}, const SingularOptions& so = {});

namespace detail {

// Smoothness of V(I) over Q from a computation modulo p. The generators of
// I and the minors used have p-integral coefficients, so they define a
// projective scheme over Z_(p) whose fibre over Q is the rational zero set.
// That scheme is proper, so its image in Spec Z_(p) is closed; an empty
// fibre over p leaves no room for a nonempty fibre over Q. A nonempty
// answer modulo p proves nothing and returns nullopt.
inline std::optional<ModularProof> modular_smoothness(const std::vector<Polynomial<Rational>>& gens, int dim,
                                                      unsigned truncation, const GroebnerOptions& opts,
                                                      const SingularOptions& so) {
  for (std::uint64_t p : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
    auto images = modular_images(gens, p);
    if (!images) continue;
    std::vector<Polynomial<PrimeFieldElement>> live;
    for (auto& g : *images)
      if (!g.is_zero()) live.push_back(std::move(g));
    if (live.empty()) return std::nullopt;
    try {
      Ideal<PrimeFieldElement> ip(live.front().ring_ptr(), live);
      auto rep = singular_locus(ip, dim, truncation, opts, so);
      if (!rep.smooth) return std::nullopt;
      return ModularProof{p, rep.method + "_mod_p", rep.rounds, rep.minor_count};
    } catch (const InputError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Singular subscheme of V(I) ⊂ P^n of dimension `dim`: I plus the c x c
/// minors of the Jacobian J of the reduced basis of I, c = n - dim,
/// saturated by the irrelevant ideal. Minors are computed modulo I.
///
/// Over Q the same computation is first run modulo a large prime, where an
/// empty result proves smoothness (see detail::modular_smoothness).
///
/// When J has too many c x c minors, the minors of A*J for a random c x m
/// matrix A are used instead, one A per round. Each such minor
/// is a combination of minors of J, so an empty zero set proves smoothness.
/// A fixed A loses rank only on a hypersurface section of the smooth part,
/// so after dim + 2 rounds the zero set is the singular locus with
/// probability 1.
template <Field K>
SingularReport<K> singular_locus(const Ideal<K>& ideal, int dim, unsigned truncation,
                                 const GroebnerOptions& opts, const SingularOptions& so) {
  const RingPtr& ring = ideal.ring_ptr();
  const long n = static_cast<long>(ring->size()) - 1;
  if (dim < 0 || dim > n) throw InputError("singular_locus needs 0 <= dim <= n");
  std::size_t c = static_cast<std::size_t>(n - dim);
  SingularReport<K> rep{Ideal<K>::unit(ring), {}, false, c, 0, "all_minors", 0};
  auto finish_smooth = [&] {
    rep.ideal = Ideal<K>::unit(ring);
    rep.invariants = variety_invariants(rep.ideal, truncation, MonomialOrder::degrevlex(), opts);
    rep.smooth = true;
    return rep;
  };
  if (c == 0) return finish_smooth();
  const std::vector<Polynomial<K>>& gens = ideal.groebner_basis(opts);
  if (gens.size() < c) throw InputError("fewer generators than the codimension");
  if constexpr (std::is_same_v<K, Rational>) {
    if (auto proof = detail::modular_smoothness(gens, dim, truncation, opts, so)) {
      rep.method = proof->method;
      rep.rounds = proof->rounds;
      rep.minor_count = proof->minor_count;
      rep.certificate_prime = proof->prime;
      return finish_smooth();
    }
  }
  auto reduce = [&](const Polynomial<K>& f) { return normal_form(f, ideal, opts); };
  Matrix<Polynomial<K>> jac = jacobian(gens);
  std::vector<Polynomial<K>> all = gens;
  std::size_t base = gens.size();
  auto empty_now = [&] {
    return variety_invariants(Ideal<K>(ring, all), truncation, MonomialOrder::degrevlex(), opts).empty();
  };

  SampleRng rng(so.seed, -10, 10);
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.total_degree());
  // Minors of A*J where A_ik = a_ik * l_i^(top - deg g_k) for random scalars
  // a_ik and random linear forms l_i, so every row of A*J is homogeneous.
  // Each minor lies in the ideal of c x c minors of J. With `lowest_only`
  // the rows combine only the generators of least degree, unweighted; at a
  // point of V(I) where those rows have rank c so does J.
  std::function<Polynomial<K>(const Polynomial<K>&)> reducer(reduce);
  int low = top;
  std::size_t low_count = 0;
  for (const auto& g : gens) low = std::min(low, g.total_degree());
  for (const auto& g : gens) low_count += g.total_degree() == low ? 1 : 0;
  auto compressed_round = [&](bool lowest_only) {
    std::vector<Polynomial<K>> data;
    for (std::size_t i = 0; i < c; ++i) {
      Polynomial<K> l(ring);
      for (std::size_t v = 0; v < ring->size(); ++v) l += Polynomial<K>::variable(ring, v).scaled(rng.next_value<K>(ring->field()));
      std::vector<Polynomial<K>> weight;
      for (const auto& g : gens) {
        Polynomial<K> w = Polynomial<K>::constant(ring, rng.next_value<K>(ring->field()));
        if (lowest_only && g.total_degree() != low) w = Polynomial<K>(ring);
        for (int e = g.total_degree(); e < top && !lowest_only; ++e) w = w * l;
        weight.push_back(std::move(w));
      }
      for (std::size_t j = 0; j < ring->size(); ++j) {
        Polynomial<K> e(ring);
        for (std::size_t k = 0; k < gens.size(); ++k)
          if (!weight[k].is_zero() && !jac(k, j).is_zero()) e += weight[k] * jac(k, j);
        data.push_back(reduce(e));
      }
    }
    Matrix<Polynomial<K>> compressed(c, ring->size(), std::move(data));
    detail::add_minors(all, base, minors(compressed, c, reducer));
    ++rep.rounds;
  };

  Integer total = detail::count_subsets(gens.size(), c) * detail::count_subsets(ring->size(), c);
  if (total <= Integer(static_cast<unsigned long>(so.max_minors))) {
    detail::add_minors(all, base, minors(jac, c, reducer));
    rep.rounds = 1;
  } else {
    // Where J has rank c, A*J drops rank on a hypersurface section of V(I)
    // (the column space of J meets ker A). Independent rounds cut these
    // sections down, so after dim + 2 rounds only the singular locus is
    // left with probability 1.
    rep.method = "row_compressed";
    std::size_t needed = static_cast<std::size_t>(dim) + 2;
    bool empty = false;
    if (low < top && low_count >= c) {
      // Cheap smoothness attempt on the lowest-degree generators; their
      // zero set contains the singular locus but may be larger.
      while (!empty && rep.rounds < needed) {
        compressed_round(true);
        empty = detail::maybe_empty(all, truncation, opts) && empty_now();
      }
      if (!empty) {
        all.erase(all.begin() + static_cast<std::ptrdiff_t>(base), all.end());
        rep.rounds = 0;
      }
    }
    while (!empty && rep.rounds < needed) {
      compressed_round(false);
      empty = detail::maybe_empty(all, truncation, opts) && empty_now();
    }
  }
  rep.minor_count = all.size() - base;
  if (empty_now()) return finish_smooth();
  rep.ideal = saturate_irrelevant(Ideal<K>(ring, all), opts);
  rep.invariants = variety_invariants(rep.ideal, truncation, MonomialOrder::degrevlex(), opts);
  rep.smooth = rep.invariants.empty();
  return rep;
}

}  // namespace hadamard

#endif  // HADAMARD_GEOMETRY_SINGULAR_HPP
