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

#include <gtest/gtest.h>

#include "hadamard/parse.hpp"
#include "support.hpp"

namespace hadamard {
namespace {

using Q = Rational;
using Fp = PrimeFieldElement;
const CoeffField kQ = CoeffField::rational();

template <Field K = Q>
Ideal<K> ideal_in(std::size_t n, const std::vector<std::string>& texts, const CoeffField& field = kQ) {
  RingPtr x = ambient_ring(n, field);
  std::vector<Polynomial<K>> gens;
  for (const auto& t : texts) gens.push_back(parse_poly<K>(t, x));
  return Ideal<K>(x, gens);
}

// Parametric factor in P^n from forms in y0..y{k}.
VarietyPresentation<Q> param(const std::string& name, std::size_t k, unsigned d,
                             const std::vector<std::string>& forms) {
  RingPtr y = multiparameter_ring({static_cast<unsigned>(k)}, kQ);
  std::vector<Polynomial<Q>> fs;
  for (const auto& f : forms) fs.push_back(parse_poly<Q>(f, y));
  return VarietyPresentation<Q>::parametric(name, forms.size() - 1, fs, d);
}

TEST(SegreVeronese, ProductOfLinesIsTheQuadricSurface) {
  auto s = segre_veronese<Q>({1, 1}, {1, 1}, kQ);
  EXPECT_EQ(s.target, 3u);
  Ideal<Q> ideal = s.implicit_ideal();
  EXPECT_TRUE(ideal_equal(ideal, ideal_in(3, {"x1*x2 - x0*x3"})));
}

TEST(SegreVeronese, ConicAndTwistedCubic) {
  auto conic = segre_veronese<Q>({2}, {1}, kQ);
  EXPECT_TRUE(ideal_equal(conic.implicit_ideal(), ideal_in(2, {"x1^2 - x0*x2"})));
  auto cubic = segre_veronese<Q>({3}, {1}, kQ);
  auto rep = variety_invariants(cubic.implicit_ideal());
  EXPECT_EQ(rep.dimension, 1);
  EXPECT_EQ(*rep.degree, 3);
  EXPECT_THROW(segre_veronese<Q>({1, 2}, {1, 1}, kQ, std::size_t{4}), InputError);
}

TEST(SegreVeronese, DegreeMatchesMultinomialFormula) {
  // P1 x P1 embedded by O(1, 2): dimension 2, degree 2! * 1 * 2 = 4.
  auto s = segre_veronese<Q>({1, 2}, {1, 1}, kQ);
  auto rep = variety_invariants(s.implicit_ideal());
  EXPECT_EQ(s.target, 5u);
  EXPECT_EQ(rep.dimension, 2);
  EXPECT_EQ(*rep.degree, 4);
}

TEST(Terracini, SecantDimensions) {
  EXPECT_EQ(terracini_secant_dim(segre_veronese<Q>({1, 1}, {1, 1}, kQ), 0).dimension, 3);
  EXPECT_EQ(terracini_secant_dim(segre_veronese<Q>({1, 2}, {1, 1}, kQ), 0).dimension, 5);
  EXPECT_EQ(terracini_secant_dim(segre_veronese<Q>({2}, {1}, kQ), 0).dimension, 2);
  // The Veronese surface is secant defective: its secant variety is a cubic hypersurface in P5.
  EXPECT_EQ(terracini_secant_dim(segre_veronese<Q>({2}, {2}, kQ), 0).dimension, 4);
}

TEST(Hadamard, PointProductIsCoordinatewise) {
  ProjectivePoint<Q> p({Q(1), Q(2), Q(0)}), q({Q(3), Q(-1), Q(5)});
  EXPECT_EQ(hadamard_point(p, q), ProjectivePoint<Q>({Q(3), Q(-2), Q(0)}));
  ProjectivePoint<Q> a({Q(1), Q(0)}), b({Q(0), Q(1)});
  EXPECT_THROW(hadamard_point(a, b), UndefinedProduct);
  EXPECT_THROW(ProjectivePoint<Q>({Q(0), Q(0)}), InputError);
}

TEST(Hadamard, TwoGenericLinesInP3GiveASmoothQuadric) {
  auto l1 = param("L1", 1, 1, {"y0 + 2*y1", "3*y0 - y1", "y0 + y1", "-2*y0 + 5*y1"});
  auto l2 = param("L2", 1, 1, {"y0 - y1", "2*y0 + 7*y1", "-y0 + 4*y1", "3*y0 + y1"});
  auto h = hadamard_product<Q>({l1, l2}, 3);
  auto rep = variety_invariants(h.ideal);
  EXPECT_EQ(rep.dimension, 2);
  EXPECT_EQ(*rep.degree, 2);
  EXPECT_EQ(product_point_failures(h.ideal, {l1, l2}, 20, 0), 0u);
  EXPECT_TRUE(equivalence_certificate(h.ideal, {l1, l2}).holds());
  EXPECT_TRUE(singular_locus(h.ideal, 2).smooth);
}

TEST(Hadamard, IsCommutative) {
  auto conic = ideal_in(3, {"x0*x1 - x2^2", "x3 - x0 - x1"});
  auto line = ideal_in(3, {"x0 - 2*x1 + x2", "x3 - x1 - 3*x2"});
  EXPECT_TRUE(ideal_equal(hadamard_ideal(conic, line), hadamard_ideal(line, conic)));
}

TEST(Hadamard, AllOnesPointIsTheIdentity) {
  auto conic = ideal_in(3, {"x0*x1 - x2^2", "x3 - x0 - x1"});
  auto ones = all_ones_ideal<Q>(3, kQ);
  EXPECT_TRUE(ideal_equal(hadamard_ideal(conic, ones), conic));
  EXPECT_TRUE(ideal_equal(hadamard_ideal(ones, conic), conic));
}

TEST(Hadamard, SampledProductPointsLieOnTheProduct) {
  auto inst = sample_generic_instance<Q>({{1, 1}, {1, 2}}, 4, 9);
  ASSERT_TRUE(inst.certified);
  auto h = hadamard_product(inst.factors, 4);
  std::size_t skipped = 0;
  EXPECT_EQ(product_point_failures(h.ideal, inst.factors, 20, 1, &skipped), 0u);
  EXPECT_LT(skipped, 20u);
}

TEST(Sampling, SeededInstancesAreReproducible) {
  auto a = sample_generic_instance<Q>({{1, 2}, {1, 1}}, 3, 42);
  auto b = sample_generic_instance<Q>({{1, 2}, {1, 1}}, 3, 42);
  ASSERT_EQ(a.factors.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < a.factors[i].forms().size(); ++j)
      EXPECT_EQ(a.factors[i].forms()[j], b.factors[i].forms()[j]);
  EXPECT_TRUE(a.certified);
  EXPECT_EQ(a.rank, 4u);
}

TEST(Projection, CenterOfTwoLinesInThePlane) {
  // Products y0*z0, y1*z1, (y0 + y1)(z0 - z1) span a plane of P^3 whose
  // kernel point [0:1:1:0] is off the quadric x0*x3 - x1*x2.
  auto x = param("X", 1, 1, {"y0", "y1", "y0 + y1"});
  auto y = param("Y", 1, 1, {"y0", "y1", "y0 - y1"});
  auto spec = projection_center(coefficient_points<Q>({x, y}), kQ);
  EXPECT_EQ(spec.rank, 3u);
  EXPECT_EQ(spec.center_dimension, 0);
  ASSERT_EQ(spec.center.size(), 1u);
  EXPECT_EQ(spec.center[0], (std::vector<Q>{0, 1, 1, 0}));
  auto s = segre_veronese<Q>({1, 1}, {1, 1}, kQ);
  EXPECT_FALSE(center_on_variety(spec, s.implicit_ideal()));
}

TEST(Singular, ConeOverAConicHasOneSingularPoint) {
  for (bool modular : {false, true}) {
    if (modular) {
      auto cone = ideal_in<Fp>(3, {"x0*x1 - x2^2"}, CoeffField::modular(65521));
      auto rep = singular_locus(cone, 2);
      EXPECT_FALSE(rep.smooth);
      EXPECT_EQ(rep.invariants.dimension, 0);
      EXPECT_EQ(*rep.invariants.degree, 1);
    } else {
      auto rep = singular_locus(ideal_in(3, {"x0*x1 - x2^2"}), 2);
      EXPECT_FALSE(rep.smooth);
      EXPECT_EQ(rep.invariants.dimension, 0);
      EXPECT_EQ(*rep.invariants.degree, 1);
      EXPECT_EQ(rep.certificate_prime, 0u);
    }
  }
}

TEST(Singular, SmoothVarietiesAndTheModularProof) {
  auto quadric = singular_locus(ideal_in(3, {"x0*x1 - x2*x3"}), 2);
  EXPECT_TRUE(quadric.smooth);
  EXPECT_NE(quadric.certificate_prime, 0u);
  auto cubic = singular_locus(ideal_in(3, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}), 1);
  EXPECT_TRUE(cubic.smooth);
  auto nodal = singular_locus(ideal_in(2, {"x1^2*x2 - x0^2*x0 - x0^2*x2"}), 1);
  EXPECT_FALSE(nodal.smooth);
  EXPECT_EQ(nodal.invariants.dimension, 0);
}

TEST(Singular, RowCompressedMethodFindsTheSameLocus) {
  SingularOptions so;
  so.max_minors = 0;
  auto exact = singular_locus(ideal_in(3, {"x0*x1 - x2^2"}), 2);
  auto compressed = singular_locus(ideal_in(3, {"x0*x1 - x2^2"}), 2, 5, {}, so);
  EXPECT_EQ(compressed.method, "row_compressed");
  EXPECT_TRUE(ideal_equal(exact.ideal, compressed.ideal));
}

}  // namespace
}  // namespace hadamard
