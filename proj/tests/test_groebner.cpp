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
using Q = Rational;
using Fp = PrimeFieldElement;

std::vector<Polynomial<Q>> parse_all(const std::vector<std::string>& texts, const RingPtr& r) {
  std::vector<Polynomial<Q>> out;
  for (const auto& t : texts) out.push_back(parse_poly<Q>(t, r));
  return out;
}

// Images of rational polynomials in Z/p[x], or nullopt when p divides a
// denominator.
std::optional<std::vector<Polynomial<Fp>>> reduce_mod(const std::vector<Polynomial<Q>>& fs, const RingPtr& target) {
  std::vector<Polynomial<Fp>> out;
  try {
    for (const auto& f : fs) {
      std::vector<Term<Fp>> terms;
      for (const auto& t : f.terms()) terms.push_back({rat_to_fp(t.coeff, target->field().prime), t.mono});
      out.emplace_back(target, std::move(terms));
    }
  } catch (const BadPrime&) {
    return std::nullopt;
  }
  return out;
}

TEST(Groebner, TwistedCubicBasis) {
  auto r = Ring::make(Ring::indexed("x", 4));
  auto gens = parse_all({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, r);
  auto g = buchberger<Q>(gens, r);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(is_groebner_basis(g));
  EXPECT_TRUE(is_reduced_basis(g));
  auto lex = r->with_order(MonomialOrder::lex());
  std::vector<Polynomial<Q>> lgens;
  for (const auto& f : gens) lgens.push_back(f.rebased(lex));
  auto gl = buchberger<Q>(lgens, lex);
  EXPECT_TRUE(is_groebner_basis(gl));
  EXPECT_TRUE(is_reduced_basis(gl));
  EXPECT_GE(gl.size(), 3u);
}

TEST(Groebner, UnitAndZeroIdeals) {
  auto r = Ring::make(Ring::indexed("x", 2));
  auto g = buchberger<Q>(parse_all({"x0*x1 - 1", "x0"}, r), r);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g[0].is_constant());
  EXPECT_TRUE(buchberger<Q>({Polynomial<Q>(r)}, r).empty());
}

TEST(Groebner, SPolynomialCertificateOnRandomIdeals) {
  std::mt19937_64 gen(31);
  std::vector<MonomialOrder> orders{MonomialOrder::degrevlex(), MonomialOrder::lex(), MonomialOrder::block({1})};
  for (const auto& order : orders) {
    auto r = Ring::make(Ring::indexed("x", 3), CoeffField::rational(), order);
    for (int i = 0; i < 12; ++i) {
      std::vector<Polynomial<Q>> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(random_poly<Q>(gen, r, 2, 3));
      auto g = buchberger<Q>(gens, r);
      EXPECT_TRUE(is_groebner_basis(g));
      EXPECT_TRUE(is_reduced_basis(g));
      for (const auto& f : gens) EXPECT_TRUE(normal_form<Q>(f, g).is_zero());
    }
  }
}

TEST(Groebner, ModularAndRationalLeadingTermsAgree) {
  std::mt19937_64 gen(37);
  auto r = Ring::make(Ring::indexed("x", 4));
  auto rp = r->with_field(CoeffField::modular(65521));
  int compared = 0;
  for (int i = 0; i < 15; ++i) {
    std::vector<Polynomial<Q>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly<Q>(gen, r, 2, 4, true));
    auto images = reduce_mod(gens, rp);
    if (!images) continue;
    auto gq = buchberger<Q>(gens, r);
    auto gp = buchberger<Fp>(*images, rp);
    ASSERT_EQ(gq.size(), gp.size());
    for (std::size_t k = 0; k < gq.size(); ++k) EXPECT_EQ(gq[k].leading_monomial(), gp[k].leading_monomial());
    ++compared;
  }
  EXPECT_GT(compared, 10);
}

TEST(Groebner, BudgetIsEnforced) {
  auto r = Ring::make(Ring::indexed("x", 4));
  auto gens = parse_all({"x0^3 - x1*x2*x3", "x1^3 - x0*x2^2", "x2^3 - x0^2*x3", "x3^3 - x0*x1*x2"}, r);
  GroebnerOptions tight;
  tight.max_pair_reductions = 3;
  EXPECT_THROW(buchberger<Q>(gens, r, tight), BudgetExceeded);
}

TEST(Elimination, ParametricTwistedCubic) {
  auto r = Ring::make({"s", "t", "x0", "x1", "x2", "x3"}, CoeffField::rational(), MonomialOrder::block({2}));
  auto gens = parse_all({"x0 - s^3", "x1 - s^2*t", "x2 - s*t^2", "x3 - t^3"}, r);
  Ideal<Q> elim = eliminate(Ideal<Q>(r, gens), std::vector<std::string>{"s", "t"});
  auto x = Ring::make(Ring::indexed("x", 4));
  Ideal<Q> expected(x, parse_all({"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}, x));
  EXPECT_TRUE(ideal_equal(detail::into_ring(elim, x), expected));
}

TEST(Elimination, KeptGeneratorsLieInTheIdealAndAvoidDroppedVariables) {
  std::mt19937_64 gen(41);
  auto r = Ring::make(Ring::indexed("x", 4));
  for (int i = 0; i < 10; ++i) {
    std::vector<Polynomial<Q>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_poly<Q>(gen, r, 2, 3));
    Ideal<Q> ideal(r, gens);
    Ideal<Q> elim = eliminate(ideal, std::vector<std::size_t>{0});
    ASSERT_EQ(elim.ring().size(), 3u);
    std::vector<std::size_t> back{1, 2, 3};
    for (const auto& g : elim.generators()) {
      if (g.is_zero()) continue;
      EXPECT_TRUE(ideal_member(g.mapped(r, back), ideal));
    }
  }
}

TEST(IdealOps, ColonSaturationRemovesEmbeddedPoint) {
  auto r = Ring::make(Ring::indexed("x", 3));
  // (x0) ∩ (x0, x1, x2)^2: saturation by x1 recovers (x0).
  Ideal<Q> i(r, parse_all({"x0^2", "x0*x1", "x0*x2"}, r));
  Ideal<Q> sat = colon_saturate(i, Polynomial<Q>::variable(r, 1));
  EXPECT_TRUE(ideal_equal(sat, Ideal<Q>(r, parse_all({"x0"}, r))));
  EXPECT_TRUE(ideal_equal(saturate_irrelevant(i), Ideal<Q>(r, parse_all({"x0"}, r))));
}

TEST(IdealOps, IntersectionContainsProductsAndLiesInBoth) {
  auto r = Ring::make(Ring::indexed("x", 3));
  Ideal<Q> a(r, parse_all({"x0", "x1"}, r));
  Ideal<Q> b(r, parse_all({"x1 - x2"}, r));
  Ideal<Q> c = intersect(a, b);
  for (const auto& g : c.generators()) {
    EXPECT_TRUE(ideal_member(g, a));
    EXPECT_TRUE(ideal_member(g, b));
  }
  EXPECT_TRUE(ideal_member(parse_poly<Q>("x0*x1 - x0*x2", r), c));
  EXPECT_FALSE(ideal_member(parse_poly<Q>("x0", r), c));
}

TEST(IdealOps, SaturatingTheIrrelevantIdealGivesTheUnitIdeal) {
  auto r = Ring::make(Ring::indexed("x", 3));
  Ideal<Q> m2(r, parse_all({"x0^2", "x1^2", "x2^2", "x0*x1"}, r));
  EXPECT_TRUE(saturate_irrelevant(m2).is_unit());
}

}  // namespace
}  // namespace hadamard
