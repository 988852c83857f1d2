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

#ifndef HADAMARD_GEOMETRY_SAMPLING_HPP
#define HADAMARD_GEOMETRY_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hadamard/geometry/segre.hpp"

namespace hadamard {

/// Seeded integer source. mt19937_64 output is fixed by the standard; the
/// reduction to a range is done here so draws match across libraries.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed, long lo = -100, long hi = 100) : gen_(seed), lo_(lo), hi_(hi) {
    if (lo > hi) throw InputError("empty sampling range");
  }

  long next() {
    std::uint64_t span = static_cast<std::uint64_t>(hi_ - lo_) + 1;
    return lo_ + static_cast<long>(gen_() % span);
  }

  template <Field K>
  K next_value(const CoeffField& field) {
    return field_traits<K>::from_rational(Rational(next()), field);
  }

 private:
  std::mt19937_64 gen_;
  long lo_, hi_;
};

/// Image of a seeded random parameter point.
template <Field K>
ProjectivePoint<K> sample_point(const VarietyPresentation<K>& v, std::uint64_t seed, long lo = -100,
                                long hi = 100) {
  SampleRng rng(seed, lo, hi);
  for (int attempt = 0; attempt <= 100; ++attempt) {
    std::vector<K> params;
    for (std::size_t i = 0; i < v.parameter_count(); ++i) params.push_back(rng.next_value<K>(v.field()));
    std::vector<K> x;
    bool any = false;
    for (const auto& f : v.forms()) {
      x.push_back(f.evaluate(params));
      any = any || !x.back().is_zero();
    }
    if (any) return ProjectivePoint<K>(std::move(x));
  }
  throw DegeneratePresentation("'" + v.name() + "' produced only zero points in 100 redraws");
}

struct FactorShape {
  unsigned r = 1;  // dimension
  unsigned d = 1;  // degree of the coordinate forms
};

template <Field K>
struct GenericInstance {
  std::vector<VarietyPresentation<K>> factors;
  bool certified = false;
  std::size_t rank = 0;           // rank of M' (linear) or of the coefficient points
  std::size_t expected_rank = 0;  // min(n + 1, N + 1)
  unsigned attempts = 0;
};

/// A form of degree d with random coefficients on every monomial; zero draws
/// are redrawn up to 100 times, after which the zero form is kept.
template <Field K>
Polynomial<K> random_form(const RingPtr& ring, unsigned d, SampleRng& rng) {
  auto exps = degree_monomials(ring->size(), d);
  for (int attempt = 0; attempt <= 100; ++attempt) {
    Polynomial<K> f(ring);
    for (const auto& e : exps) {
      K c = rng.next_value<K>(ring->field());
      if (c.is_zero()) continue;
      Monomial m(ring->size());
      for (std::size_t k = 0; k < e.size(); ++k) m.set(k, e[k]);
      f = f + Polynomial<K>::term(ring, c, m);
    }
    if (!f.is_zero()) return f;
  }
  return Polynomial<K>(ring);
}

/// Random factors of the given shapes in P^n. The instance is certified
/// generic when the coefficient-point matrix (M' for linear factors) has
/// rank min(n + 1, N + 1); uncertified draws are retried up to `retries`
/// times and the last one is returned uncertified.
template <Field K>
GenericInstance<K> sample_generic_instance(const std::vector<FactorShape>& shapes, std::size_t n,
                                           std::uint64_t seed, const CoeffField& field = CoeffField::rational(),
                                           long lo = -100, long hi = 100, unsigned retries = 20) {
  if (n < 1) throw InputError("ambient dimension must be at least 1");
  if (shapes.empty()) throw InputError("no factor shapes");
  SampleRng rng(seed, lo, hi);
  GenericInstance<K> inst;
  for (unsigned attempt = 1; attempt <= retries; ++attempt) {
    inst.factors.clear();
    inst.attempts = attempt;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      if (shapes[i].r == 0 || shapes[i].d == 0) throw InputError("factor dimension and degree must be positive");
      RingPtr params = Ring::make(Ring::indexed(parameter_prefix(i), shapes[i].r + 1), field,
                                  MonomialOrder::degrevlex());
      std::vector<Polynomial<K>> forms;
      for (std::size_t j = 0; j <= n; ++j) forms.push_back(random_form<K>(params, shapes[i].d, rng));
      auto v = VarietyPresentation<K>::parametric("X" + std::to_string(i + 1), n, std::move(forms), shapes[i].d);
      v.claimed_dimension = static_cast<int>(shapes[i].r);
      inst.factors.push_back(std::move(v));
    }
    Matrix<K> m = coefficient_matrix(inst.factors);
    inst.rank = rank(m);
    inst.expected_rank = std::min(m.rows(), m.cols());
    inst.certified = inst.rank == inst.expected_rank;
    if (inst.certified) break;
  }
  return inst;
}

}  // namespace hadamard

#endif  // HADAMARD_GEOMETRY_SAMPLING_HPP
