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

#ifndef HADAMARD_GEOMETRY_HADAMARD_HPP
#define HADAMARD_GEOMETRY_HADAMARD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hadamard/geometry/presentation.hpp"
#include "hadamard/ideal.hpp"

namespace hadamard {

/// Ideal of the closure of the image of a parametric presentation: the
/// parameters are eliminated from (x_i - f_i). The forms share a degree, so
/// the result is homogeneous.
template <Field K>
Ideal<K> implicitize(const VarietyPresentation<K>& v, const GroebnerOptions& opts = {}) {
  const auto& forms = v.forms();
  const Ring& params = *v.parameter_ring();
  for (const auto& f : forms)
    if (!f.is_zero() && f.total_degree() != static_cast<int>(v.form_degree()))
      throw InputError("coordinate forms have different degrees");
  std::size_t np = params.size();
  std::size_t n = v.ambient();
  RingPtr x = ambient_ring(n, v.field());
  std::vector<std::string> names = params.names();
  for (const auto& s : x->names()) {
    if (params.index_of(s)) throw InputError("parameter name '" + s + "' clashes with an ambient variable");
    names.push_back(s);
  }
  RingPtr ring = Ring::make(names, v.field(), MonomialOrder::block({np}));
  std::vector<std::size_t> pmap(np);
  for (std::size_t i = 0; i < np; ++i) pmap[i] = i;
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i <= n; ++i)
    gens.push_back(Polynomial<K>::variable(ring, np + i) - forms[i].mapped(ring, pmap));
  std::vector<std::size_t> drop(np);
  for (std::size_t i = 0; i < np; ++i) drop[i] = i;
  Ideal<K> elim = eliminate(Ideal<K>(ring, gens), drop, opts);
  return detail::into_ring(elim, x);
}

/// I(V) in the x-ring, implicitizing when needed.
template <Field K>
Ideal<K> implicit_ideal(const VarietyPresentation<K>& v, const GroebnerOptions& opts = {}) {
  return v.is_parametric() ? implicitize(v, opts) : v.ideal();
}

/// Ideal of the all-ones point [1 : ... : 1], the identity for ★.
template <Field K>
Ideal<K> all_ones_ideal(std::size_t n, const CoeffField& field) {
  RingPtr x = ambient_ring(n, field);
  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 1; i <= n; ++i)
    gens.push_back(Polynomial<K>::variable(x, i) - Polynomial<K>::variable(x, 0));
  if (gens.empty()) return Ideal<K>::zero(x);
  return Ideal<K>(x, gens);
}

template <Field K>
struct HadamardResult {
  Ideal<K> ideal;
  std::vector<VarietyPresentation<K>> factors;
  // The ideal defines the Zariski closure of {P ★ Q}; no saturation applied.
  bool closure = true;
};

/// I(X ★ Y) from I(X), I(Y) ⊂ K[x0..xn]: eliminate the y- and z-blocks from
/// I(X)(y) + I(Y)(z) + (x_j - y_j z_j) in K[y, z, x].
template <Field K>
Ideal<K> hadamard_ideal(const Ideal<K>& a, const Ideal<K>& b, const GroebnerOptions& opts = {}) {
  if (!a.ring().compatible(b.ring())) throw InputError("Hadamard factors live in different ambient spaces");
  std::size_t n1 = a.ring().size();
  const CoeffField& field = a.ring().field();
  std::vector<std::string> names = Ring::indexed("y", n1);
  for (const auto& s : Ring::indexed("z", n1)) names.push_back(s);
  for (const auto& s : a.ring().names()) names.push_back(s);
  std::vector<VariableBlock> blocks{{"y", 0, n1}, {"z", n1, 2 * n1}, {"x", 2 * n1, 3 * n1}};
  RingPtr ring = Ring::make(names, field, MonomialOrder::block({2 * n1}), blocks);
  std::vector<std::size_t> to_y(n1), to_z(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    to_y[i] = i;
    to_z[i] = n1 + i;
  }
  std::vector<Polynomial<K>> gens;
  for (const auto& g : a.groebner_basis(opts)) gens.push_back(g.mapped(ring, to_y));
  for (const auto& g : b.groebner_basis(opts)) gens.push_back(g.mapped(ring, to_z));
  for (std::size_t j = 0; j < n1; ++j)
    gens.push_back(Polynomial<K>::variable(ring, 2 * n1 + j) -
                   Polynomial<K>::variable(ring, j) * Polynomial<K>::variable(ring, n1 + j));
  std::vector<std::size_t> drop(2 * n1);
  for (std::size_t i = 0; i < 2 * n1; ++i) drop[i] = i;
  Ideal<K> elim = eliminate(Ideal<K>(ring, gens), drop, opts);
  return detail::into_ring(elim, a.ring_ptr());
}

/// X_1 ★ ... ★ X_l, as left-associated binary products.
template <Field K>
HadamardResult<K> hadamard_product(const std::vector<VarietyPresentation<K>>& factors, std::size_t n,
                                   const GroebnerOptions& opts = {}) {
  if (factors.size() < 2) throw InputError("a Hadamard product needs at least two factors");
  for (const auto& f : factors)
    if (f.ambient() != n)
      throw InputError("factor '" + f.name() + "' lives in P^" + std::to_string(f.ambient()) +
                       ", expected P^" + std::to_string(n));
  Ideal<K> acc = implicit_ideal(factors[0], opts);
  for (std::size_t i = 1; i < factors.size(); ++i) acc = hadamard_ideal(acc, implicit_ideal(factors[i], opts), opts);
  return HadamardResult<K>{acc, factors, true};
}

}  // namespace hadamard

#endif  // HADAMARD_GEOMETRY_HADAMARD_HPP
