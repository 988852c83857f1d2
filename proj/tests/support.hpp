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

// Shared helpers for the unit suites: seeded random polynomials and a
// brute-force standard-monomial counter.

#ifndef HADAMARD_TESTS_SUPPORT_HPP
#define HADAMARD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hadamard/hadamard.hpp"

namespace hadamard::testing {

// All exponent vectors of total degree d in k variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t k, unsigned d) {
  std::vector<Monomial> out;
  for (const auto& e : degree_monomials(k, d)) out.emplace_back(e);
  return out;
}

// Number of degree-t monomials not divisible by any of `leading`.
inline long standard_monomial_count(const std::vector<Monomial>& leading, std::size_t nvars, unsigned t) {
  long count = 0;
  for (const auto& m : monomials_of_degree(nvars, t)) {
    bool standard = true;
    for (const auto& l : leading)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
  }
  return count;
}

template <Field K>
K small_scalar(std::mt19937_64& gen, const CoeffField& field, long lo = -9, long hi = 9) {
  long v = lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  return field_traits<K>::from_rational(Rational(v), field);
}

// Random polynomial with up to `terms` terms of total degree <= maxdeg, or
// exactly `maxdeg` when homogeneous.
template <Field K>
Polynomial<K> random_poly(std::mt19937_64& gen, const RingPtr& ring, unsigned maxdeg, std::size_t terms,
                          bool homogeneous = false) {
  Polynomial<K> f(ring);
  for (std::size_t i = 0; i < terms; ++i) {
    unsigned d = homogeneous ? maxdeg : static_cast<unsigned>(gen() % (maxdeg + 1));
    auto monos = monomials_of_degree(ring->size(), d);
    const Monomial& m = monos[gen() % monos.size()];
    f += Polynomial<K>::term(ring, small_scalar<K>(gen, ring->field()), m);
  }
  return f;
}

}  // namespace hadamard::testing

#endif  // HADAMARD_TESTS_SUPPORT_HPP
