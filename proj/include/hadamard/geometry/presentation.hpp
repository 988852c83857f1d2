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

#ifndef HADAMARD_GEOMETRY_PRESENTATION_HPP
#define HADAMARD_GEOMETRY_PRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/ideal.hpp"
#include "hadamard/polynomial.hpp"

namespace hadamard {

/// Coordinate ring of P^n: variables x0..xn, degrevlex.
inline RingPtr ambient_ring(std::size_t n, const CoeffField& field) {
  return Ring::make(Ring::indexed("x", n + 1), field, MonomialOrder::degrevlex());
}

/// A point of P^n; equality is up to a nonzero scalar.
template <Field K>
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<K> coords) : c_(std::move(coords)) {
    bool any = false;
    for (const auto& v : c_) any = any || !v.is_zero();
    if (!any) throw InputError("projective point with all coordinates zero");
  }

  const std::vector<K>& coords() const noexcept { return c_; }
  std::size_t ambient() const noexcept { return c_.size() - 1; }

  /// Scaled so the first nonzero coordinate is 1.
  ProjectivePoint normalized() const {
    for (const auto& v : c_)
      if (!v.is_zero()) {
        K s = v.inverse();
        std::vector<K> out = c_;
        for (auto& x : out) x *= s;
        return ProjectivePoint(std::move(out));
      }
    return *this;
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = i + 1; j < a.c_.size(); ++j)
        if (!(a.c_[i] * b.c_[j] == a.c_[j] * b.c_[i])) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i].is_zero() != b.c_[i].is_zero()) return false;
    return true;
  }

 private:
  std::vector<K> c_;
};

/// Coordinatewise product [p0 q0 : ... : pn qn].
template <Field K>
ProjectivePoint<K> hadamard_point(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q) {
  if (p.coords().size() != q.coords().size()) throw InputError("points live in different ambients");
  std::vector<K> c;
  bool any = false;
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    c.push_back(p.coords()[i] * q.coords()[i]);
    any = any || !c.back().is_zero();
  }
  if (!any) throw UndefinedProduct("Hadamard product of the points is undefined (all products vanish)");
  return ProjectivePoint<K>(std::move(c));
}

/// A subvariety of P^n given parametrically (n+1 forms of a common degree in
/// r+1 parameters) or implicitly (a homogeneous ideal of the x-ring).
template <Field K>
class VarietyPresentation {
 public:
  enum class Kind { Parametric, Implicit };
  using Poly = Polynomial<K>;

  static VarietyPresentation parametric(std::string name, std::size_t ambient, std::vector<Poly> forms,
                                        unsigned degree) {
    if (forms.size() != ambient + 1)
      throw InputError("factor '" + name + "' needs " + std::to_string(ambient + 1) + " coordinate forms");
    RingPtr params = forms.front().ring_ptr();
    for (const auto& f : forms) {
      if (!f.ring().compatible(*params)) throw InputError("coordinate forms of '" + name + "' use different rings");
      if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != static_cast<int>(degree)))
        throw InputError("coordinate forms of '" + name + "' are not all homogeneous of degree " +
                         std::to_string(degree));
    }
    VarietyPresentation v;
    v.kind_ = Kind::Parametric;
    v.name_ = std::move(name);
    v.ambient_ = ambient;
    v.forms_ = std::move(forms);
    v.degree_ = degree;
    v.field_ = params->field();
    return v;
  }

  static VarietyPresentation implicit(std::string name, Ideal<K> ideal) {
    if (!ideal.is_homogeneous()) throw InputError("ideal of '" + name + "' is not homogeneous");
    VarietyPresentation v;
    v.kind_ = Kind::Implicit;
    v.name_ = std::move(name);
    v.ambient_ = ideal.ring().size() - 1;
    v.field_ = ideal.ring().field();
    v.ideal_ = std::move(ideal);
    return v;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_parametric() const noexcept { return kind_ == Kind::Parametric; }
  const std::string& name() const noexcept { return name_; }
  std::size_t ambient() const noexcept { return ambient_; }
  const CoeffField& field() const noexcept { return field_; }

  const std::vector<Poly>& forms() const {
    if (!is_parametric()) throw InputError("'" + name_ + "' is not parametric");
    return forms_;
  }
  const RingPtr& parameter_ring() const { return forms().front().ring_ptr(); }
  std::size_t parameter_count() const { return parameter_ring()->size(); }
  unsigned form_degree() const {
    if (!is_parametric()) throw InputError("'" + name_ + "' is not parametric");
    return degree_;
  }
  const Ideal<K>& ideal() const {
    if (is_parametric()) throw InputError("'" + name_ + "' is not implicit");
    return *ideal_;
  }

  // Claimed metadata (dimension r, degree, linear-span dimension h).
  std::optional<int> claimed_dimension;
  std::optional<long> claimed_degree;
  std::optional<int> span_dimension;

 private:
  VarietyPresentation() = default;

  Kind kind_ = Kind::Parametric;
  std::string name_;
  std::size_t ambient_ = 0;
  CoeffField field_;
  std::vector<Poly> forms_;
  unsigned degree_ = 0;
  std::optional<Ideal<K>> ideal_;
};

/// True when every generator vanishes at the point.
template <Field K>
bool vanishes_at(const std::vector<Polynomial<K>>& gens, const ProjectivePoint<K>& p) {
  for (const auto& g : gens)
    if (!g.evaluate(p.coords()).is_zero()) return false;
  return true;
}

}  // namespace hadamard

#endif  // HADAMARD_GEOMETRY_PRESENTATION_HPP
