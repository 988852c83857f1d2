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

#ifndef HADAMARD_GEOMETRY_SECANT_HPP
#define HADAMARD_GEOMETRY_SECANT_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hadamard/geometry/sampling.hpp"
#include "hadamard/geometry/segre.hpp"

namespace hadamard {

struct SecantInfo {
  enum class Method { Formula, TerraciniSample };
  long dimension = -1;
  Method method = Method::Formula;
};

/// dim σ2(S) estimated from Terracini's lemma: the span of the affine
/// tangent spaces at two random points of the cone over S. Repeated over
/// five consecutive seeds; the largest rank wins.
template <Field K>
SecantInfo terracini_secant_dim(const SegreVeroneseSpec<K>& s, std::uint64_t seed) {
  const auto& forms = s.presentation.forms();
  const CoeffField& field = s.presentation.field();
  std::size_t np = s.presentation.parameter_count();
  std::vector<std::vector<Polynomial<K>>> partials(np);
  for (std::size_t v = 0; v < np; ++v)
    for (const auto& f : forms) partials[v].push_back(f.derivative(v));
  long best = -1;
  for (std::uint64_t k = 0; k < 5; ++k) {
    SampleRng rng(seed + k);
    std::vector<K> data;
    for (int point = 0; point < 2; ++point) {
      std::vector<K> p;
      for (std::size_t v = 0; v < np; ++v) p.push_back(rng.next_value<K>(field));
      for (std::size_t v = 0; v < np; ++v)
        for (const auto& d : partials[v]) data.push_back(d.evaluate(p));
    }
    Matrix<K> jac(2 * np, forms.size(), std::move(data));
    best = std::max(best, static_cast<long>(rank(jac)) - 1);
  }
  return SecantInfo{best, SecantInfo::Method::TerraciniSample};
}

}  // namespace hadamard

#endif  // HADAMARD_GEOMETRY_SECANT_HPP
