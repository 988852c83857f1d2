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

// Segre-Veronese embeddings and the coefficient-point constructions: the
// matrix M' of products of parameterization coefficients and the center of
// the induced projection.

#ifndef HADAMARD_GEOMETRY_SEGRE_HPP
#define HADAMARD_GEOMETRY_SEGRE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hadamard/geometry/hadamard.hpp"
#include "hadamard/geometry/presentation.hpp"
#include "hadamard/invariants.hpp"
#include "hadamard/linalg.hpp"

namespace hadamard {

/// Parameter-variable prefix for factor i: y, z, w, then s3_, s4_, ...
inline std::string parameter_prefix(std::size_t i) {
  static const char* const kFirst[] = {"y", "z", "w"};
  if (i < 3) return kFirst[i];
  return "s" + std::to_string(i) + "_";
}

/// Exponent vectors of total degree d in k variables, graded-lex descending
/// (v0^d first, v_{k-1}^d last).
inline std::vector<std::vector<unsigned>> degree_monomials(std::size_t k, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(k, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == k) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (k == 0) return out;
  rec(0, d);
  return out;
}

/// Ring with one block of r_i + 1 parameters per factor.
inline RingPtr multiparameter_ring(const std::vector<unsigned>& dims, const CoeffField& field) {
  std::vector<std::string> names;
  std::vector<VariableBlock> blocks;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::size_t begin = names.size();
    for (const auto& s : Ring::indexed(parameter_prefix(i), dims[i] + 1)) names.push_back(s);
    blocks.push_back({parameter_prefix(i), begin, names.size()});
  }
  return Ring::make(names, field, MonomialOrder::degrevlex(), blocks);
}

/// Monomials of multidegree (d_1..d_l) in `ring` (blocks as in
/// multiparameter_ring), each block graded-lex, nested left to right.
inline std::vector<Monomial> multidegree_basis(const Ring& ring, const std::vector<unsigned>& degrees) {
  const auto& blocks = ring.blocks();
  if (blocks.size() != degrees.size()) throw InputError("one degree per parameter block required");
  std::vector<Monomial> out{Monomial(ring.size())};
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<Monomial> next;
    auto exps = degree_monomials(blocks[b].size(), degrees[b]);
    for (const auto& m : out)
      for (const auto& e : exps) {
        Monomial x = m;
        for (std::size_t k = 0; k < e.size(); ++k) x.set(blocks[b].begin + k, e[k]);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

inline long binomial_long(long n, long k) { return detail::binomial(n, k).get_si(); }

template <Field K>
struct SegreVeroneseSpec {
  std::vector<unsigned> degrees;  // type (d_1..d_l)
  std::vector<unsigned> dims;     // (r_1..r_l)
  std::size_t target = 0;         // N
  std::vector<Monomial> basis;    // coordinate monomials, in coordinate order
  VarietyPresentation<K> presentation;

  Ideal<K> implicit_ideal(const GroebnerOptions& opts = {}) const { return implicitize(presentation, opts); }
};

/// The Segre-Veronese variety S ⊂ P^N of the given type; `ambient`, when
/// given, must be at least N.
template <Field K>
SegreVeroneseSpec<K> segre_veronese(const std::vector<unsigned>& degrees, const std::vector<unsigned>& dims,
                                    const CoeffField& field, std::optional<std::size_t> ambient = std::nullopt) {
  if (degrees.empty() || degrees.size() != dims.size()) throw InputError("type and dimensions must match");
  long count = 1;
  unsigned total = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == 0 || dims[i] == 0) throw InputError("degrees and dimensions must be positive");
    count *= binomial_long(dims[i] + degrees[i], degrees[i]);
    total += degrees[i];
  }
  std::size_t big_n = static_cast<std::size_t>(count - 1);
  if (ambient && *ambient < big_n)
    throw InputError("ambient P^" + std::to_string(*ambient) + " is smaller than P^" + std::to_string(big_n));
  RingPtr params = multiparameter_ring(dims, field);
  std::vector<Monomial> basis = multidegree_basis(*params, degrees);
  std::vector<Polynomial<K>> forms;
  for (const auto& m : basis) forms.push_back(Polynomial<K>::term(params, field_traits<K>::one(field), m));
  auto pres = VarietyPresentation<K>::parametric("S", big_n, std::move(forms), total);
  return SegreVeroneseSpec<K>{degrees, dims, big_n, std::move(basis), std::move(pres)};
}

/// Joint parameter ring for a list of parametric factors: the factors'
/// parameters are renamed into consecutive blocks y, z, w, ...
template <Field K>
struct JointParameters {
  RingPtr ring;
  std::vector<std::vector<Polynomial<K>>> forms;  // per factor, mapped into `ring`
  std::vector<unsigned> degrees;
  std::vector<unsigned> dims;
};

template <Field K>
JointParameters<K> joint_parameters(const std::vector<VarietyPresentation<K>>& factors) {
  if (factors.empty()) throw InputError("no factors");
  JointParameters<K> jp;
  for (const auto& f : factors) {
    if (!f.is_parametric()) throw InputError("factor '" + f.name() + "' is not parametric");
    if (f.parameter_count() == 0) throw InputError("factor '" + f.name() + "' has no parameters");
    jp.dims.push_back(static_cast<unsigned>(f.parameter_count() - 1));
    jp.degrees.push_back(f.form_degree());
  }
  jp.ring = multiparameter_ring(jp.dims, factors.front().field());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<std::size_t> map(factors[i].parameter_count());
    for (std::size_t k = 0; k < map.size(); ++k) map[k] = jp.ring->blocks()[i].begin + k;
    std::vector<Polynomial<K>> mapped;
    for (const auto& f : factors[i].forms()) mapped.push_back(f.mapped(jp.ring, map));
    jp.forms.push_back(std::move(mapped));
  }
  return jp;
}

/// Row j = coefficient vector of f_{1j} f_{2j} ... in the multidegree
/// monomial basis of the Segre-Veronese embedding of the factors' type.
template <Field K>
Matrix<K> coefficient_matrix(const std::vector<VarietyPresentation<K>>& factors) {
  std::size_t n = factors.front().ambient();
  for (const auto& f : factors)
    if (f.ambient() != n) throw InputError("factors live in different ambient spaces");
  JointParameters<K> jp = joint_parameters(factors);
  std::vector<Monomial> basis = multidegree_basis(*jp.ring, jp.degrees);
  std::vector<K> data;
  for (std::size_t j = 0; j <= n; ++j) {
    Polynomial<K> prod = Polynomial<K>::one(jp.ring);
    for (const auto& forms : jp.forms) prod = prod * forms[j];
    for (const auto& m : basis) data.push_back(prod.coeff_of(m));
  }
  return Matrix<K>(n + 1, basis.size(), std::move(data));
}

/// The points P_j of P^N given by the rows of coefficient_matrix.
template <Field K>
std::vector<ProjectivePoint<K>> coefficient_points(const std::vector<VarietyPresentation<K>>& factors) {
  Matrix<K> m = coefficient_matrix(factors);
  std::vector<ProjectivePoint<K>> pts;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    std::vector<K> row = m.row(j);
    bool any = false;
    for (const auto& v : row) any = any || !v.is_zero();
    if (!any) throw InputError("coordinate product form " + std::to_string(j) + " is zero");
    pts.emplace_back(std::move(row));
  }
  return pts;
}

/// Rows of the matrix are the point coordinates.
template <Field K>
Matrix<K> points_matrix(const std::vector<ProjectivePoint<K>>& pts) {
  std::vector<K> data;
  for (const auto& p : pts) data.insert(data.end(), p.coords().begin(), p.coords().end());
  return Matrix<K>(pts.size(), pts.front().coords().size(), std::move(data));
}

/// M' for linear factors: row i lists the products a_{i j1} b_{i j2} ... of
/// the coefficients of the i-th coordinate forms, nested in factor order.
template <Field K>
Matrix<K> build_m_prime(const std::vector<VarietyPresentation<K>>& factors) {
  for (const auto& f : factors)
    if (!f.is_parametric() || f.form_degree() != 1)
      throw InputError("build_m_prime needs linear parameterizations; use coefficient_points");
  std::size_t n = factors.front().ambient();
  std::vector<K> data;
  std::size_t cols = 1;
  for (const auto& f : factors) cols *= f.parameter_count();
  for (std::size_t row = 0; row <= n; ++row) {
    std::vector<K> acc{field_traits<K>::one(factors.front().field())};
    for (const auto& f : factors) {
      if (f.ambient() != n) throw InputError("factors live in different ambient spaces");
      std::vector<K> next;
      const auto& form = f.forms()[row];
      for (const auto& a : acc)
        for (std::size_t k = 0; k < f.parameter_count(); ++k)
          next.push_back(a * form.coeff_of(Monomial::variable(f.parameter_count(), k)));
      acc = std::move(next);
    }
    data.insert(data.end(), acc.begin(), acc.end());
  }
  return Matrix<K>(n + 1, cols, std::move(data));
}

template <Field K>
struct ProjectionSpec {
  Matrix<K> matrix;                       // (n+1) x (N+1)
  std::vector<std::vector<K>> center;     // basis of Λ (affine cone)
  std::size_t rank = 0;
  long center_dimension = -1;             // projective dim Λ = N - rank
};

template <Field K>
ProjectionSpec<K> projection_center(const std::vector<ProjectivePoint<K>>& pts, const CoeffField& field) {
  if (pts.empty()) throw InputError("no points");
  ProjectionSpec<K> spec;
  spec.matrix = points_matrix(pts);
  spec.rank = rank(spec.matrix);
  spec.center = kernel_basis(spec.matrix, field);
  spec.center_dimension = static_cast<long>(spec.matrix.cols()) - 1 - static_cast<long>(spec.rank);
  return spec;
}

}  // namespace hadamard

#endif  // HADAMARD_GEOMETRY_SEGRE_HPP
