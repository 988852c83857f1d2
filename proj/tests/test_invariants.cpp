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

#include <random>

#include "hadamard/parse.hpp"
#include "support.hpp"

namespace hadamard {
namespace {

using testing::random_poly;
using testing::standard_monomial_count;
using Q = Rational;

Ideal<Q> ideal_of(const std::vector<std::string>& texts, const RingPtr& r) {
  std::vector<Polynomial<Q>> gens;
  for (const auto& t : texts) gens.push_back(parse_poly<Q>(t, r));
  return Ideal<Q>(r, gens);
}

void expect_hf_matches_brute_force(const Ideal<Q>& ideal) {
  InvariantReport rep = variety_invariants(ideal, 6);
  auto lm = leading_monomials(ideal.groebner_basis(MonomialOrder::degrevlex()));
  for (unsigned t = 0; t <= 6; ++t)
    EXPECT_EQ(rep.hilbert_function[t], standard_monomial_count(lm, ideal.ring().size(), t)) << "t = " << t;
}

TEST(HilbertNumerator, MonomialIdealsMatchDirectCounts) {
  EXPECT_EQ(hilbert_numerator({}, 3).to_string(), "1");
  Monomial x0sq{2, 0, 0};
  // 1 - t^2 for a single quadric generator
  EXPECT_EQ(hilbert_numerator({x0sq}, 3).at_one(), 0);
  EXPECT_EQ(hilbert_numerator({x0sq}, 3).coeff(2), -1);
  EXPECT_THROW(hilbert_numerator({Monomial{1, 0}}, 3), InputError);
}

TEST(Invariants, TwistedCubic) {
  auto r = Ring::make(Ring::indexed("x", 4));
  auto rep = variety_invariants(ideal_of({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, r), 6);
  EXPECT_EQ(rep.dimension, 1);
  EXPECT_EQ(*rep.degree, 3);
  for (unsigned t = 0; t <= 6; ++t) EXPECT_EQ(rep.hilbert_function[t], 3 * t + 1);
}

TEST(Invariants, CompleteIntersectionDegreeIsTheProductOfDegrees) {
  auto r = Ring::make(Ring::indexed("x", 4));
  auto rep = variety_invariants(ideal_of({"x0^2 + x1^2 - x2*x3", "x0*x1*x2 - x3^3 + x1^3"}, r));
  EXPECT_EQ(rep.dimension, 1);
  EXPECT_EQ(*rep.degree, 6);
}

TEST(Invariants, IrrelevantComponentsAreEmpty) {
  auto r = Ring::make(Ring::indexed("x", 3));
  auto rep = variety_invariants(ideal_of({"x0^2", "x1^3", "x2", "x0*x1"}, r));
  EXPECT_TRUE(rep.empty());
  EXPECT_FALSE(rep.degree.has_value());
  EXPECT_TRUE(variety_invariants(Ideal<Q>::unit(r)).empty());
  auto whole = variety_invariants(Ideal<Q>::zero(r));
  EXPECT_EQ(whole.dimension, 2);
  EXPECT_EQ(*whole.degree, 1);
}

TEST(Invariants, RejectsInhomogeneousIdeals) {
  auto r = Ring::make(Ring::indexed("x", 3));
  EXPECT_THROW(variety_invariants(ideal_of({"x0^2 - x1"}, r)), InputError);
}

TEST(Invariants, HilbertFunctionMatchesStandardMonomialCountsToDegreeSix) {
  auto r = Ring::make(Ring::indexed("x", 4));
  expect_hf_matches_brute_force(ideal_of({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, r));
  expect_hf_matches_brute_force(ideal_of({"x0*x1", "x2^3 - x0*x1*x3"}, r));
  std::mt19937_64 gen(43);
  for (int i = 0; i < 12; ++i) {
    std::vector<Polynomial<Q>> gens;
    std::size_t k = 1 + gen() % 4;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(random_poly<Q>(gen, r, 1 + gen() % 3, 3, true));
    expect_hf_matches_brute_force(Ideal<Q>(r, gens));
  }
}

TEST(Invariants, ProductCheckComparesPointwise) {
  InvariantReport a, b, p;
  a.hilbert_function = {1, 2, 3};
  b.hilbert_function = {1, 3, 5};
  p.hilbert_function = {1, 6, 14};
  auto ok = hf_product_check({a, b}, p, 2);
  EXPECT_EQ(ok, (std::vector<bool>{true, true, false}));
  EXPECT_THROW(hf_product_check({a, b}, p, 3), InputError);
}

}  // namespace
}  // namespace hadamard
