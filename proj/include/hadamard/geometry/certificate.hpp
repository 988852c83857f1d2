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

// Independent checks on a computed Hadamard product: point vanishing,
// projective equivalence with the Segre-Veronese image (large ambient), and
// membership of projection centers in S.

#ifndef HADAMARD_GEOMETRY_CERTIFICATE_HPP
#define HADAMARD_GEOMETRY_CERTIFICATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hadamard/geometry/hadamard.hpp"
#include "hadamard/geometry/sampling.hpp"
#include "hadamard/geometry/segre.hpp"
#include "hadamard/invariants.hpp"

namespace hadamard {

/// Number of sampled product points P1 ★ ... ★ Pl (factors parametric,
/// `samples` seeded draws) at which some generator does not vanish; points
/// whose product is undefined are skipped and counted in `skipped`.
template <Field K>
std::size_t product_point_failures(const Ideal<K>& product, const std::vector<VarietyPresentation<K>>& factors,
                                   std::size_t samples, std::uint64_t seed, std::size_t* skipped = nullptr) {
  std::size_t bad = 0, skip = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::optional<ProjectivePoint<K>> p;
    try {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto q = sample_point(factors[i], seed + 1000 * i + s);
        p = p ? hadamard_point(*p, q) : q;
      }
    } catch (const UndefinedProduct&) {
      ++skip;
      continue;
    }
    if (!vanishes_at(product.generators(), *p)) ++bad;
  }
  if (skipped) *skipped = skip;
  return bad;
}

template <Field K>
struct EquivalenceCertificate {
  bool completed = false;              // M' extends to an invertible M
  bool substitution_vanishes = false;  // generators vanish on (f_1j ... f_lj)_j
  std::vector<bool> hf_multiplicative;
  Matrix<K> m;

  bool holds() const {
    if (!completed || !substitution_vanishes) return false;
    for (bool b : hf_multiplicative)
      if (!b) return false;
    return true;
  }
};

/// With M = completion of the coefficient matrix, the product variety is M
/// applied to the Segre-Veronese image: substituting x_j = Π_i f_ij into
/// every generator gives zero, and the Hilbert function is the product of
/// the factors' Hilbert functions up to T.
template <Field K>
EquivalenceCertificate<K> equivalence_certificate(const Ideal<K>& product,
                                                  const std::vector<VarietyPresentation<K>>& factors,
                                                  unsigned truncation = 5, const GroebnerOptions& opts = {}) {
  EquivalenceCertificate<K> cert;
  const CoeffField& field = product.ring().field();
  Matrix<K> mp = coefficient_matrix(factors);
  try {
    cert.m = complete_to_invertible(mp, field);
    cert.completed = true;
  } catch (const Error&) {
    cert.completed = false;
  }
  JointParameters<K> jp = joint_parameters(factors);
  std::vector<Polynomial<K>> images;
  for (std::size_t j = 0; j < product.ring().size(); ++j) {
    Polynomial<K> p = Polynomial<K>::one(jp.ring);
    for (const auto& forms : jp.forms) p = p * forms[j];
    images.push_back(std::move(p));
  }
  cert.substitution_vanishes = true;
  for (const auto& g : product.generators())
    if (!g.substitute(images).is_zero()) cert.substitution_vanishes = false;
  std::vector<InvariantReport> reps;
  for (const auto& f : factors)
    reps.push_back(variety_invariants(implicit_ideal(f, opts), truncation, MonomialOrder::degrevlex(), opts));
  cert.hf_multiplicative =
      hf_product_check(reps, variety_invariants(product, truncation, MonomialOrder::degrevlex(), opts), truncation);
  return cert;
}

/// True when every kernel vector of the projection lies on S.
template <Field K>
bool center_on_variety(const ProjectionSpec<K>& spec, const Ideal<K>& s_ideal) {
  if (spec.center.empty()) return false;
  for (const auto& v : spec.center)
    if (!vanishes_at(s_ideal.generators(), ProjectivePoint<K>(v))) return false;
  return true;
}

}  // namespace hadamard

#endif  // HADAMARD_GEOMETRY_CERTIFICATE_HPP
